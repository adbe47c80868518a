"""Brute-force oracles and poset generators shared across the suite.

Each oracle recomputes its quantity by plain enumeration, independently
of the code path it cross-checks.
"""

import random
from itertools import combinations

from posetzeta import build_poset

FIXED_SEED = 20240823


def random_poset(rng, max_elements=7, edge_prob=0.35):
    """Random DAG on index order, closed by build_poset."""
    n = rng.randint(1, max_elements)
    labels = [f"e{i}" for i in range(n)]
    relations = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return build_poset(labels, relations)


def random_posets(count, seed=FIXED_SEED, **kwargs):
    rng = random.Random(seed)
    return [random_poset(rng, **kwargs) for _ in range(count)]


def brute_strict_chain_counts(p):
    """N_i by checking every subset for being totally ordered."""
    n = len(p)
    counts = []
    for size in range(1, n + 1):
        total = 0
        for sub in combinations(range(n), size):
            if all(
                p.less(p.labels[a], p.labels[b])
                or p.less(p.labels[b], p.labels[a])
                for a, b in combinations(sub, 2)
            ):
                total += 1
        if total == 0:
            break
        counts.append(total)
    return tuple(counts)


def brute_weak_chain_count(p, i):
    """Weakly increasing sequences of length i, enumerated outright."""
    n = len(p)

    def le(a, b):
        return a == b or p.less(p.labels[a], p.labels[b])

    seqs = [(a,) for a in range(n)]
    for _ in range(i):
        seqs = [s + (b,) for s in seqs for b in range(n) if le(s[-1], b)]
    return len(seqs)


def flag_chain_count(i, d):
    """Strictly increasing flags of nonempty subsets ending at {1..d+1}.

    Counts chains S_0 < S_1 < ... < S_i = full set; the subset-lattice
    analogue of the subdivision chain numbers.
    """
    universe = frozenset(range(d + 1))
    subsets = [
        frozenset(c)
        for size in range(1, d + 2)
        for c in combinations(range(d + 1), size)
    ]
    counts = {s: 1 for s in subsets}
    for _ in range(i):
        nxt = {}
        for s in subsets:
            nxt[s] = sum(
                counts[t] for t in subsets if t < s
            )
        counts = nxt
    return counts[universe]


def descents(seq):
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)
