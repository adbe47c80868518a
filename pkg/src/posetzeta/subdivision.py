"""Chain-count triangles, descent matrices, and subdivision dynamics.

The three number families (f, F, H) and the matrix identities relating
them drive everything downstream: the transfer matrix that evolves chain
vectors under repeated subdivision, the spectral constants of that
recurrence, and the limit polynomial whose roots attract the bounded
zeros of the chain series.
"""

import csv
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .errors import BruteForceTooLarge, DimensionZero, IndexOutOfRange
from .linalg import ExactMatrix
from .polynomial import ExactPolynomial
from .poset import ChainVector, dimension, strict_chain_vector

BRUTE_FORCE_MAX_D = 8

# Process-global memo tables; fills are idempotent, so concurrent readers
# are safe.
_f_memo = {(-1, -1): 1}
_F_memo = {}


def f_number(i, d):
    """Chains of length i in the subdivision ending at a fixed d-chain."""
    if i < -1 or d < -1:
        raise ValueError("indices must be >= -1")
    if i == -1:
        return 1 if d == -1 else 0
    if d == -1 or i > d:
        return 0
    key = (i, d)
    if key not in _f_memo:
        _f_memo[key] = sum(
            comb(d + 1, j) * f_number(i - 1, j - 1) for j in range(i, d + 1)
        )
    return _f_memo[key]


def big_F_number(i, d):
    """Eigenvector component for the top eigenvalue of the f-matrix."""
    if d < 0 or i < -1 or i > d:
        raise IndexOutOfRange(f"F_{{{i},{d}}} undefined")
    if i == d:
        return Fraction(1)
    if i == -1:
        return Fraction(0)
    key = (i, d)
    if key not in _F_memo:
        total = sum(
            f_number(i, j) * big_F_number(j, d) for j in range(i + 1, d + 1)
        )
        _F_memo[key] = Fraction(total, factorial(d + 1) - factorial(i + 1))
    return _F_memo[key]


def F_polynomial(d):
    """Polynomial with coefficient of s^(d-i) equal to F_{i,d}."""
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    return ExactPolynomial(
        [big_F_number(d - e, d) for e in range(d + 2)]
    )


def H_vector(d):
    """Coefficients (H_0, ..., H_{d+1}) of the shift of F_d to s - 1.

    The d = 0 case follows the (0, 1) convention; the generic shift
    degenerates there (see H_polynomial).
    """
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    if d == 0:
        return (Fraction(0), Fraction(1))
    shifted = F_polynomial(d).shifted(-1)
    return tuple(shifted[k] for k in range(d + 2))


def H_polynomial(d):
    """Self-reciprocal limit polynomial; effective degree d - 1.

    Coefficient of s^(d-i) is H_{i,d}.  For d = 0 the convention is the
    constant polynomial 1.
    """
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    if d == 0:
        return ExactPolynomial([1])
    hv = H_vector(d)
    return ExactPolynomial([hv[d - e] for e in range(d + 1)])


def _descent_recurrence(d):
    # Rows indexed -1..d stored with offset 1.
    if d == 0:
        return [[1, 0], [0, 1]]
    prev = _descent_recurrence(d - 1)

    def h_prev(i, j):
        if i < -1 or i > d - 1 or j < -1 or j > d - 1:
            return 0
        return prev[i + 1][j + 1]

    out = []
    for i in range(-1, d + 1):
        row = []
        for j in range(-1, d + 1):
            v = sum(h_prev(i - 1, l) for l in range(-1, j))
            v += sum(h_prev(i, l) for l in range(j, d))
            row.append(v)
        out.append(row)
    return out


def _descents(seq):
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def _descent_brute_force(d):
    n = d + 2
    counts = [[0] * (d + 2) for _ in range(d + 2)]
    for j in range(1, n + 1):
        rest = [v for v in range(1, n + 1) if v != j]
        for perm in permutations(rest):
            i = _descents((j,) + perm)
            # A(n, i, j) contributes to entry (i - 1, j - 2) in natural
            # indices, i.e. offset storage (i, j - 1).
            if 0 <= i <= d + 1:
                counts[i][j - 1] += 1
    return counts


def descent_matrix(d, method="recurrence"):
    """Matrix of first-value/descent permutation counts, indexed -1..d."""
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    if method == "recurrence":
        entries = _descent_recurrence(d)
    elif method == "brute_force":
        if d > BRUTE_FORCE_MAX_D:
            raise BruteForceTooLarge(
                f"brute force enumerates {factorial(d + 2)} permutations"
            )
        entries = _descent_brute_force(d)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ExactMatrix(entries, index_offset=1)


def f_matrix(d, primed=False):
    """Upper-triangular chain-transfer matrix.

    Unprimed: indices -1..d with diagonal 0!..(d+1)!.  Primed: indices
    0..d (the variant that acts on chain vectors).
    """
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    if primed:
        return ExactMatrix(
            [[f_number(i, j) for j in range(d + 1)] for i in range(d + 1)]
        )
    return ExactMatrix(
        [
            [f_number(i, j) for j in range(-1, d + 1)]
            for i in range(-1, d + 1)
        ],
        index_offset=1,
    )


def taylor_matrix(d, inverse=False):
    """Matrix of the coefficient shift to s = -1, or its inverse."""
    if d < 0:
        raise IndexOutOfRange("d must be >= 0")
    if inverse:
        entries = [
            [comb(j + 1, d - i) for j in range(-1, d + 1)]
            for i in range(-1, d + 1)
        ]
    else:
        entries = [
            [
                (-1) ** (d + 1 + i + j) * comb(d - j, i + 1)
                if 0 <= i + 1 <= d - j
                else 0
                for j in range(-1, d + 1)
            ]
            for i in range(-1, d + 1)
        ]
    return ExactMatrix(entries, index_offset=1)


@dataclass(frozen=True)
class SimilarityReport:
    d: int
    inverse_ok: bool
    similarity_ok: bool
    f_eigenvector_ok: bool
    h_eigenvector_ok: bool

    @property
    def ok(self):
        return (
            self.inverse_ok
            and self.similarity_ok
            and self.f_eigenvector_ok
            and self.h_eigenvector_ok
        )


def verify_similarity(d):
    """Exact check of the conjugation and eigenvector identities."""
    t = taylor_matrix(d)
    t_inv = taylor_matrix(d, inverse=True)
    fm = f_matrix(d)
    hm = descent_matrix(d)
    inverse_ok = (t * t_inv) == ExactMatrix.identity(d + 2, index_offset=1)
    similarity_ok = (t * fm * t_inv) == hm
    lam = factorial(d + 1)
    f_vec = [big_F_number(i, d) for i in range(-1, d + 1)]
    f_eigen_ok = (fm * f_vec) == [lam * v for v in f_vec]
    h_vec = list(H_vector(d))
    h_eigen_ok = (hm * h_vec) == [lam * v for v in h_vec]
    return SimilarityReport(d, inverse_ok, similarity_ok, f_eigen_ok, h_eigen_ok)


def transfer_iterate(start, k):
    """Apply the chain-vector transfer matrix k times."""
    if k < 0:
        raise ValueError("k must be >= 0")
    d = start.dim
    fm = f_matrix(d, primed=True)
    counts = list(start.counts)
    for _ in range(k):
        counts = [int(v) for v in (fm * counts)]
    return ChainVector(tuple(counts))


@dataclass(frozen=True)
class SpectralConstants:
    """Partial-fraction constants of the chain-count generating functions.

    C[j][i] is the coefficient of the geometric mode with ratio
    (d+1-j)! in the count of length-i chains; j runs over 0..d-i.
    """

    d: int
    C: tuple

    def get(self, j, i):
        if not (0 <= i <= self.d and 0 <= j <= self.d - i):
            raise IndexOutOfRange(f"C_{{{j},{i}}} undefined")
        return self.C[j][i]

    def reconstruct(self, i, k):
        """Chain count of length i after k subdivisions."""
        return sum(
            self.get(j, i) * Fraction(factorial(self.d + 1 - j)) ** k
            for j in range(self.d - i + 1)
        )


def spectral_constants(p):
    """Exact eigendecomposition of the transfer recurrence for p."""
    d = dimension(p)
    if d < 1:
        raise DimensionZero("spectral constants need dimension >= 1")
    start = strict_chain_vector(p)
    # Eigenvector v_m of the primed transfer matrix for eigenvalue (m+1)!:
    # supported on indices 0..m with v_m[m] = 1, solved upward.
    vecs = []
    for m in range(d + 1):
        lam = factorial(m + 1)
        v = [Fraction(0)] * (d + 1)
        v[m] = Fraction(1)
        for i in range(m - 1, -1, -1):
            total = sum(
                f_number(i, j) * v[j] for j in range(i + 1, m + 1)
            )
            v[i] = Fraction(total, lam - factorial(i + 1))
        vecs.append(v)
    # Expand the start vector over the eigenbasis; triangular because
    # v_m is supported on 0..m.
    coeffs = [Fraction(0)] * (d + 1)
    residual = [Fraction(c) for c in start.counts]
    for m in range(d, -1, -1):
        coeffs[m] = residual[m]
        for i in range(m + 1):
            residual[i] -= coeffs[m] * vecs[m][i]
    # C[j][i] pairs mode (d+1-j)! with eigenindex m = d - j.
    C = tuple(
        tuple(coeffs[d - j] * vecs[d - j][i] for i in range(d - j + 1))
        for j in range(d + 1)
    )
    return SpectralConstants(d, C)


@dataclass(frozen=True)
class RowPropertyReport:
    d: int
    top_row_powers_ok: bool
    monotone_chain_ok: bool
    rotational_symmetry_ok: bool

    @property
    def ok(self):
        return (
            self.top_row_powers_ok
            and self.monotone_chain_ok
            and self.rotational_symmetry_ok
        )


def h_row_properties(d):
    """Top-row powers of two, the monotone chain, and rotational symmetry."""
    if d < 1:
        raise IndexOutOfRange("d must be >= 1")
    hm = descent_matrix(d)
    powers_ok = all(hm.get(0, j) == 2 ** (d - j) for j in range(d + 1))
    m = (d - 1) // 2
    last_j = -1 if d % 2 == 0 else m
    chain = []
    for i in range(m + 1):
        stop = last_j if i == m else -1
        for j in range(d, stop - 1, -1):
            chain.append(hm.get(i, j))
    monotone_ok = all(a <= b for a, b in zip(chain, chain[1:]))
    rotation_ok = all(
        hm.get(i, j) == hm.get(d - 1 - i, d - 1 - j)
        for i in range(-1, d + 1)
        for j in range(-1, d + 1)
    )
    return RowPropertyReport(d, powers_ok, monotone_ok, rotation_ok)


@dataclass(frozen=True)
class BoundsReport:
    d_max: int
    per_d: dict = field(compare=False)

    @property
    def ok(self):
        return all(all(flags.values()) for flags in self.per_d.values())


def H1_bounds_check(d_max):
    """Exact two-sided bounds on H_1, positivity, and self-reciprocity.

    The irrational lower bound sqrt(2)^d is compared by squaring both
    sides, keeping the whole check rational.
    """
    if d_max < 1:
        raise IndexOutOfRange("d_max must be >= 1")
    per_d = {}
    for d in range(1, d_max + 1):
        hv = H_vector(d)
        h1 = hv[1]
        lower_ok = h1 > 0 and (
            (Fraction(factorial(d + 1) * d) * h1) ** 2 >= 2 ** d
        )
        upper_ok = h1 <= Fraction(2 ** (d + 1), factorial(d + 1))
        positive_ok = all(hv[i] > 0 for i in range(1, d + 1))
        reciprocal_ok = all(
            hv[i] == hv[d + 1 - i] for i in range(d + 2)
        )
        per_d[d] = {
            "lower": lower_ok,
            "upper": upper_ok,
            "positive": positive_ok,
            "self_reciprocal": reciprocal_ok,
        }
    return BoundsReport(d_max, per_d)


# Optional on-disk cache of the f/F triangles (POSET_ZETA_CACHE).

_F_CACHE_FILES = {"f": "f_numbers.csv", "F": "big_f_numbers.csv"}


def load_memo_cache(directory):
    for kind, fname in _F_CACHE_FILES.items():
        path = os.path.join(directory, fname)
        if not os.path.exists(path):
            continue
        with open(path, newline="", encoding="utf-8") as fh:
            for i_s, d_s, val in csv.reader(fh):
                key = (int(i_s), int(d_s))
                if kind == "f":
                    _f_memo.setdefault(key, int(val))
                else:
                    _F_memo.setdefault(key, Fraction(val))


def save_memo_cache(directory):
    os.makedirs(directory, exist_ok=True)
    for kind, fname in _F_CACHE_FILES.items():
        memo = _f_memo if kind == "f" else _F_memo
        path = os.path.join(directory, fname)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            for (i, d), val in sorted(memo.items()):
                writer.writerow([i, d, str(val)])
