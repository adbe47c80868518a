"""Dense exact-rational polynomials and reduced rational functions.

Coefficients are fractions.Fraction throughout; no floating point enters
this module.  Coefficient lists are stored lowest degree first and the
zero polynomial has degree -1.
"""

from fractions import Fraction
from math import gcd

from .errors import DivergentAtInfinity, PoleAtOrigin


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class ExactPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == ExactPolynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(
            [self[k] + other[k] for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPolynomial([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ExactPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return ExactPolynomial(
            [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def shifted(self, a):
        """Return p(s + a), computed by Horner-style composition."""
        a = _frac(a)
        out = ExactPolynomial()
        s_plus_a = ExactPolynomial([a, 1])
        for c in reversed(self.coeffs):
            out = out * s_plus_a + c
        return out

    def divmod(self, other):
        """Exact polynomial division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading
        for k in range(len(rem) - 1, d - 1, -1):
            if rem[k] == 0:
                continue
            f = rem[k] / lead
            q[k - d] = f
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= f * b
        return ExactPolynomial(q), ExactPolynomial(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero:
            return self
        lead = self.leading
        return ExactPolynomial([c / lead for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero else a

    def integer_primitive(self):
        """Scale to integer coefficients with content 1 (sign preserved)."""
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return ExactPolynomial([v // g for v in ints])

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"


class ExactRationalFunction:
    """Quotient of integer polynomials, kept reduced.

    The reduced form is normalized so that both parts have integer
    coefficients with content 1 and the denominator is positive at 0
    (or has positive leading coefficient when it vanishes there).
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator):
        if not isinstance(numerator, ExactPolynomial):
            numerator = ExactPolynomial(numerator)
        if not isinstance(denominator, ExactPolynomial):
            denominator = ExactPolynomial(denominator)
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        if numerator.is_zero:
            self.numerator = numerator
            self.denominator = ExactPolynomial([1])
            return
        g = numerator.gcd(denominator)
        if g.degree > 0:
            numerator = numerator.exact_div(g)
            denominator = denominator.exact_div(g)
        # Clear denominators and strip the common content with a single
        # scalar so the value of the quotient is unchanged.
        den = 1
        for c in numerator.coeffs + denominator.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num_ints = [int(c * den) for c in numerator.coeffs]
        den_ints = [int(c * den) for c in denominator.coeffs]
        content = 0
        for v in num_ints + den_ints:
            content = gcd(content, v)
        numerator = ExactPolynomial([v // content for v in num_ints])
        denominator = ExactPolynomial([v // content for v in den_ints])
        anchor = denominator[0] if denominator[0] != 0 else denominator.leading
        if anchor < 0:
            numerator = -numerator
            denominator = -denominator
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other):
        if not isinstance(other, ExactRationalFunction):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)

    def __repr__(self):
        return (
            f"ExactRationalFunction({self.numerator!r}, {self.denominator!r})"
        )


def series_expand(f, K):
    """First K+1 Taylor coefficients of f at 0, by linear recurrence."""
    b = f.denominator
    if b[0] == 0:
        raise PoleAtOrigin("denominator vanishes at the origin")
    a = f.numerator
    out = []
    for i in range(K + 1):
        c = Fraction(a[i])
        for j in range(1, min(i, b.degree) + 1):
            c -= b[j] * out[i - j]
        out.append(c / b[0])
    return out


def residue_at_infinity(f):
    """-[coefficient of 1/s] in the Laurent expansion of f at infinity."""
    n = f.numerator.degree
    m = f.denominator.degree
    if n > m + 1:
        raise DivergentAtInfinity(
            "numerator degree exceeds denominator degree + 1"
        )
    # Substitute s = 1/u: f(1/u) = u^(m-n) * rev(num)(u) / rev(den)(u).
    target = 1 - (m - n)
    if target < 0:
        return Fraction(0)
    rev_num = ExactPolynomial(list(reversed(f.numerator.coeffs)))
    rev_den = ExactPolynomial(list(reversed(f.denominator.coeffs)))
    series = series_expand(ExactRationalFunction(rev_num, rev_den), target)
    return -series[target]
