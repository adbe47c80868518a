"""Finite posets, chain counting, and explicit barycentric subdivision.

The strict order is stored per element as a bitmask over element indices
(a dense bit matrix), transitively closed at construction time so that
relation tests and the chain-count dynamic program are O(1) per lookup.
All values are immutable after construction.
"""

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptyPoset,
    SubdivisionTooLarge,
    UnknownLabel,
)

DEFAULT_SUBDIVISION_CAP = 100_000


class Poset:
    """Finite strict partial order over labeled elements.

    ``above[i]`` is the bitmask of indices j with element i < element j;
    it is always the full transitive closure.
    """

    __slots__ = ("labels", "above", "_index")

    def __init__(self, labels, above):
        self.labels = tuple(labels)
        self.above = tuple(above)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def less(self, a, b):
        """True iff a < b (labels)."""
        return bool(self.above[self.index(a)] >> self.index(b) & 1)

    def below_masks(self):
        n = len(self)
        below = [0] * n
        for i, mask in enumerate(self.above):
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                below[j] |= 1 << i
                m &= m - 1
        return below

    def __repr__(self):
        return f"Poset({len(self)} elements)"


@dataclass(frozen=True)
class ChainVector:
    """Strict chain counts (N0, ..., Nd); index = chain length."""

    counts: tuple

    def __post_init__(self):
        if not self.counts:
            raise ValueError("empty chain vector")
        if any(c < 1 for c in self.counts):
            raise ValueError("chain counts must be positive")
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def dim(self):
        return len(self.counts) - 1

    def __getitem__(self, i):
        return self.counts[i]

    def __len__(self):
        return len(self.counts)


def build_poset(labels, relations):
    """Construct a poset from generating pairs (a, b) meaning a < b.

    The transitive closure is taken; any cycle (including a pair (a, a))
    raises CycleDetected.
    """
    labels = list(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate element {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    direct = [0] * n
    for a, b in relations:
        if a not in index:
            raise UnknownLabel(f"unknown element {a!r}")
        if b not in index:
            raise UnknownLabel(f"unknown element {b!r}")
        i, j = index[a], index[b]
        if i == j:
            raise CycleDetected(f"relation {a!r} < {a!r}")
        direct[i] |= 1 << j

    # Kahn topological order; leftover nodes mean a cycle.
    indeg = [0] * n
    for i in range(n):
        m = direct[i]
        while m:
            j = (m & -m).bit_length() - 1
            indeg[j] += 1
            m &= m - 1
    stack = [i for i in range(n) if indeg[i] == 0]
    order = []
    while stack:
        i = stack.pop()
        order.append(i)
        m = direct[i]
        while m:
            j = (m & -m).bit_length() - 1
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
            m &= m - 1
    if len(order) != n:
        raise CycleDetected("relations contain a cycle")

    # Closure in reverse topological order: above[i] = direct | above of
    # direct successors.
    above = [0] * n
    for i in reversed(order):
        acc = direct[i]
        m = direct[i]
        while m:
            j = (m & -m).bit_length() - 1
            acc |= above[j]
            m &= m - 1
        above[i] = acc
    return Poset(labels, above)


def _require_nonempty(p):
    if len(p) == 0:
        raise EmptyPoset("operation requires a nonempty poset")


def strict_chain_vector(p):
    """Counts of strictly increasing sequences of each length."""
    _require_nonempty(p)
    n = len(p)
    below = p.below_masks()
    cur = [1] * n
    counts = [n]
    while True:
        nxt = [0] * n
        for j in range(n):
            m = below[j]
            total = 0
            while m:
                i = (m & -m).bit_length() - 1
                total += cur[i]
                m &= m - 1
            nxt[j] = total
        s = sum(nxt)
        if s == 0:
            break
        counts.append(s)
        cur = nxt
    return ChainVector(tuple(counts))


def dimension(p):
    """Length of the longest strict chain."""
    _require_nonempty(p)
    # Longest-path DP over the closed relation.
    n = len(p)
    below = p.below_masks()
    depth = [0] * n
    # Process in an order compatible with <: sort by popcount of below.
    order = sorted(range(n), key=lambda j: below[j].bit_count())
    for j in order:
        m = below[j]
        best = 0
        while m:
            i = (m & -m).bit_length() - 1
            best = max(best, depth[i] + 1)
            m &= m - 1
        depth[j] = best
    return max(depth)


def weak_chain_count(p, i):
    """Number of weakly increasing sequences of length i (identities allowed).

    Equals the sum of all entries of the i-th power of the reflexive
    adjacency matrix.
    """
    _require_nonempty(p)
    if i < 0:
        raise ValueError("length must be >= 0")
    n = len(p)
    w = [1] * n
    for _ in range(i):
        nxt = [0] * n
        for a in range(n):
            total = w[a]
            m = p.above[a]
            while m:
                b = (m & -m).bit_length() - 1
                total += w[b]
                m &= m - 1
            nxt[a] = total
        w = nxt
    return sum(w)


def euler_characteristic(p):
    """Alternating sum of the strict chain counts."""
    cv = strict_chain_vector(p)
    return sum((-1) ** i * c for i, c in enumerate(cv.counts))


def _all_chains(p):
    """All nonempty strict chains as tuples of element indices."""
    n = len(p)
    chains = []
    stack = [(i,) for i in reversed(range(n))]
    while stack:
        chain = stack.pop()
        chains.append(chain)
        m = p.above[chain[-1]]
        while m:
            j = (m & -m).bit_length() - 1
            stack.append(chain + (j,))
            m &= m - 1
    return chains


def barycentric_subdivision(p, cap=DEFAULT_SUBDIVISION_CAP):
    """Poset of all nonempty chains of p, ordered by strict inclusion.

    Chain elements are labeled by joining the original labels along the
    chain with "|", which makes iterated subdivision deterministic.
    """
    _require_nonempty(p)
    size = sum(strict_chain_vector(p).counts)
    if size > cap:
        raise SubdivisionTooLarge(
            f"subdivision has {size} elements, cap is {cap}"
        )
    chains = sorted(_all_chains(p), key=lambda c: (len(c), c))

    def label(chain):
        return "|".join(p.labels[i] for i in chain)

    labels = [label(c) for c in chains]
    relations = []
    for chain in chains:
        if len(chain) == 1:
            continue
        full = label(chain)
        for k in range(1, len(chain)):
            for sub in combinations(chain, k):
                relations.append((label(sub), full))
    return build_poset(labels, relations)


def simplex_face_poset(num_vertices):
    """Face poset of the full simplex on the given vertices."""
    if num_vertices < 1:
        raise ValueError("need at least one vertex")
    verts = [f"v{i}" for i in range(1, num_vertices + 1)]
    labels = []
    relations = []
    for k in range(1, num_vertices + 1):
        for sub in combinations(verts, k):
            labels.append("|".join(sub))
            if k > 1:
                for j in range(1, k):
                    for face in combinations(sub, j):
                        relations.append(("|".join(face), "|".join(sub)))
    return build_poset(labels, relations)


def poset_to_dict(p):
    """JSON-ready dict in the poset file format (all strict pairs)."""
    relations = []
    for i, mask in enumerate(p.above):
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            relations.append([p.labels[i], p.labels[j]])
            m &= m - 1
    relations.sort()
    return {"elements": list(p.labels), "relations": relations}


def poset_from_dict(data):
    return build_poset(data["elements"], data["relations"])


def load_poset(path):
    with open(path, encoding="utf-8") as fh:
        return poset_from_dict(json.load(fh))


def save_poset(p, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(poset_to_dict(p), fh, indent=2)
        fh.write("\n")
