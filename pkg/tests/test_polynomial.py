from fractions import Fraction as Fr

import pytest

from posetzeta import (
    DivergentAtInfinity,
    ExactPolynomial,
    ExactRationalFunction,
    PoleAtOrigin,
    residue_at_infinity,
    series_expand,
)


def test_arithmetic():
    p = ExactPolynomial([1, 2])
    q = ExactPolynomial([0, 1])
    assert (p * q).coeffs == (Fr(0), Fr(1), Fr(2))
    assert (p + q).coeffs == (Fr(1), Fr(3))
    assert (p - p).is_zero
    assert p.degree == 1
    assert ExactPolynomial([0]).degree == -1
    assert (ExactPolynomial([1, -1]) ** 3).coeffs == (
        Fr(1), Fr(-3), Fr(3), Fr(-1),
    )


def test_eval_and_shift():
    p = ExactPolynomial([1, 0, 1])  # 1 + s^2
    assert p(2) == 5
    assert p.shifted(-1).coeffs == (Fr(2), Fr(-2), Fr(1))
    assert p.shifted(-1)(3) == p(2)


def test_divmod_and_gcd():
    a = ExactPolynomial([-1, 0, 1])  # s^2 - 1
    b = ExactPolynomial([1, 1])
    q, r = a.divmod(b)
    assert q.coeffs == (Fr(-1), Fr(1))
    assert r.is_zero
    assert a.gcd(b) == b.monic()
    c = ExactPolynomial([2, 3])
    assert a.gcd(c).degree == 0


def test_rational_reduction():
    # (s^2 - 1)/(s - 1) reduces to (s + 1)/1.
    f = ExactRationalFunction([-1, 0, 1], [-1, 1])
    assert f.numerator.coeffs == (Fr(1), Fr(1))
    assert f.denominator.coeffs == (Fr(1),)
    # Reduction must not change the value.
    g = ExactRationalFunction([Fr(1, 2), Fr(1, 3)], [Fr(1, 5), 1])
    assert g(2) == Fr(Fr(1, 2) + Fr(2, 3), Fr(1, 5) + 2)


def test_series_expand():
    geo = ExactRationalFunction([1], [1, -1])
    assert series_expand(geo, 3) == [1, 1, 1, 1]
    f = ExactRationalFunction([2, -1], [1, -2, 1])
    assert series_expand(f, 4) == [2, 3, 4, 5, 6]
    with pytest.raises(PoleAtOrigin):
        series_expand(ExactRationalFunction([1], [0, 1]), 2)


def test_residue_at_infinity():
    assert residue_at_infinity(ExactRationalFunction([1], [1, -1])) == 1
    assert (
        residue_at_infinity(ExactRationalFunction([2, -1], [1, -2, 1])) == 1
    )
    # Numerator degree = denominator degree + 1 is still finite.
    assert residue_at_infinity(ExactRationalFunction([0, 0, 1], [1, 1])) != 0
    with pytest.raises(DivergentAtInfinity):
        residue_at_infinity(ExactRationalFunction([0, 0, 0, 1], [1, 1]))
