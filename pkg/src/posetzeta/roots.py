"""High-precision root finding and convergence diagnostics.

Roots are found by simultaneous Aberth-Ehrlich iteration in mpmath
arbitrary precision.  The trajectory report tracks, per subdivision
step, the dominant root against its predicted growth and the remaining
roots against the fixed roots of the limit polynomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

import mpmath as mp

from .errors import (
    DegreeZero,
    DimensionZero,
    NoConvergence,
    ZeroEulerCharacteristic,
)
from .poset import dimension, euler_characteristic, strict_chain_vector
from .subdivision import H_polynomial, H_vector, transfer_iterate
from .zeta import g_from_chain_vector

MAX_SWEEPS = 1000


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residuals: tuple
    precision_bits: int


def _to_mpf(fr):
    return mp.mpf(fr.numerator) / mp.mpf(fr.denominator)


def _horner(coeffs, z):
    acc = mp.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def find_roots(p, precision_bits=256):
    """All complex roots of an exact polynomial, deterministically.

    The polynomial is scaled by its largest absolute coefficient in
    exact arithmetic before rounding, which conditions the iteration
    when coefficients grow factorially.
    """
    if p.degree < 1:
        raise DegreeZero("root finding needs degree >= 1")
    if precision_bits < 53:
        raise ValueError("precision_bits must be >= 53")
    scale = max(abs(c) for c in p.coeffs)
    scaled = [c / scale for c in p.coeffs]
    with mp.workprec(precision_bits + 64):
        coeffs = [_to_mpf(c) for c in scaled]
        n = p.degree
        tol = mp.mpf(2) ** (-(precision_bits // 2))
        if n == 1:
            roots = [mp.mpc(-coeffs[0] / coeffs[1])]
        else:
            roots = _aberth(coeffs, n, tol)
        roots.sort(key=lambda z: (mp.re(z), mp.im(z)))
        residuals = [abs(_horner(coeffs, z)) for z in roots]
        if any(r > tol for r in residuals):
            raise NoConvergence(
                f"residuals above 2^-{precision_bits // 2}; raise precision"
            )
        return RootSet(tuple(roots), tuple(residuals), precision_bits)


def _aberth(coeffs, n, tol):
    lead = coeffs[n]
    radius = 1 + max(abs(c / lead) for c in coeffs[:n])
    # Deterministic start: points on a circle with a fixed angular offset
    # so no starting point sits on a symmetry axis.
    z = [
        mp.mpc(
            0.5
            * radius
            * mp.exp(mp.mpc(0, 2 * mp.pi * (k + mp.mpf(1) / 4) / n))
        )
        for k in range(n)
    ]
    dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
    for _ in range(MAX_SWEEPS):
        converged = True
        for i in range(n):
            pv = _horner(coeffs, z[i])
            if abs(pv) > tol:
                converged = False
            dv = _horner(dcoeffs, z[i])
            if dv == 0:
                z[i] += tol + mp.mpf(1) / 1024
                converged = False
                continue
            newton = pv / dv
            s = mp.mpc(0)
            for j in range(n):
                if j != i:
                    s += 1 / (z[i] - z[j])
            denom = 1 - newton * s
            if denom == 0:
                z[i] -= newton
            else:
                z[i] -= newton / denom
        if converged:
            return z
    raise NoConvergence(f"no convergence within {MAX_SWEEPS} sweeps")


def g_k_polynomial(p, k):
    """Exact numerator polynomial after k subdivisions."""
    d = dimension(p)
    if d < 1:
        raise DimensionZero("needs dimension >= 1")
    return g_from_chain_vector(transfer_iterate(strict_chain_vector(p), k))


@dataclass(frozen=True)
class TrajectoryRecord:
    k: int
    beta1: object
    beta1_abs: object
    es_ratio: object
    other_roots: tuple
    matched_targets: tuple
    matched_distances: tuple
    product_of_others: object


@dataclass(frozen=True)
class TrajectoryReport:
    d: int
    chi: int
    precision_bits: int
    records: tuple
    burn_in_k0: object
    es_ratio_final: object
    product_final: object
    max_match_distance_final: object
    beta1_real_from_k0: bool
    modulus_increasing_from_k0: bool


def _pick_beta1(roots):
    best = None
    for z in roots:
        key = (-abs(z), 0 if mp.im(z) == 0 else 1, mp.re(z), mp.im(z))
        if best is None or key < best[0]:
            best = (key, z)
    return best[1]


def _match(roots, targets):
    """Globally minimal-cost assignment of roots to fixed targets."""
    if not targets:
        return (), ()
    best = None
    for perm in permutations(range(len(targets))):
        cost = sum(abs(roots[i] - targets[perm[i]]) for i in range(len(roots)))
        if best is None or cost < best[0]:
            best = (cost, perm)
    perm = best[1]
    matched = tuple(targets[perm[i]] for i in range(len(roots)))
    dists = tuple(
        abs(roots[i] - targets[perm[i]]) for i in range(len(roots))
    )
    return matched, dists


def theorem_report(p, k_max, precision_bits=256):
    """Per-k diagnostics for the dominant and bounded roots."""
    d = dimension(p)
    if d < 1:
        raise DimensionZero("needs dimension >= 1")
    chi = euler_characteristic(p)
    if chi == 0:
        raise ZeroEulerCharacteristic("the growth law requires chi != 0")
    cv = strict_chain_vector(p)
    h1 = H_vector(d)[1]
    targets = ()
    if d >= 2:
        targets = find_roots(H_polynomial(d), precision_bits).roots
    records = []
    with mp.workprec(precision_bits + 64):
        for k in range(k_max + 1):
            gk = g_from_chain_vector(transfer_iterate(cv, k))
            roots = find_roots(gk, precision_bits).roots
            beta1 = _pick_beta1(roots)
            others = tuple(z for z in roots if z is not beta1)
            matched, dists = _match(others, targets)
            growth = Fraction(factorial(d + 1)) ** k * h1 * cv[d]
            es_ratio = abs(beta1) * chi / _to_mpf(growth)
            product = mp.mpc(1)
            for z in others:
                product *= z
            records.append(
                TrajectoryRecord(
                    k=k,
                    beta1=beta1,
                    beta1_abs=abs(beta1),
                    es_ratio=es_ratio,
                    other_roots=others,
                    matched_targets=matched,
                    matched_distances=dists,
                    product_of_others=product,
                )
            )
        real_tol = mp.mpf(2) ** (-(precision_bits // 4))
        real_flags = [abs(mp.im(r.beta1)) <= real_tol for r in records]
        increasing_flags = [True] + [
            records[k].beta1_abs > records[k - 1].beta1_abs
            for k in range(1, len(records))
        ]
        k0 = None
        for k in range(len(records)):
            if all(real_flags[k:]) and all(increasing_flags[k + 1:]):
                k0 = k
                break
        final = records[-1]
        return TrajectoryReport(
            d=d,
            chi=chi,
            precision_bits=precision_bits,
            records=tuple(records),
            burn_in_k0=k0,
            es_ratio_final=final.es_ratio,
            product_final=final.product_of_others,
            max_match_distance_final=(
                max(final.matched_distances) if final.matched_distances else mp.mpf(0)
            ),
            beta1_real_from_k0=k0 is not None,
            modulus_increasing_from_k0=k0 is not None,
        )
