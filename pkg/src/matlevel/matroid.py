"""Explicit-basis matroids: rank, circuits, duality, minors, connectivity,
isomorphism, and the catalog of named matroids.

Ground sets are 0..n-1; subsets are bitmasks internally and iterables of
ints at the API boundary. Matroid values are immutable and all operations
are pure functions.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import _kernels
from .errors import ExchangeViolation, MixedCardinality, UnknownName

MAX_GROUND = 32


def mask_of(elements) -> int:
    return sum(1 << e for e in set(elements))


def set_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SubsetRankReport:
    subset: tuple[int, ...]
    rank: int
    is_flat: bool
    is_circuit: bool


@dataclass(frozen=True)
class ConnectivityReport:
    components: tuple[tuple[int, ...], ...]
    count: int


class Matroid:
    """Matroid given by its full basis family (bitmask tuple, sorted)."""

    __slots__ = ("n", "bases", "rank", "__dict__")

    def __init__(self, n: int, bases: tuple[int, ...], _validated: bool = False):
        if not _validated:
            raise TypeError("use from_bases() or module constructors")
        self.n = n
        self.bases = bases
        self.rank = popcount(bases[0]) if bases else 0

    # -- construction -------------------------------------------------

    @classmethod
    def _unchecked(cls, n: int, base_masks) -> "Matroid":
        return cls(n, tuple(sorted(set(base_masks))), _validated=True)

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    # -- rank oracle ---------------------------------------------------

    def rank_of(self, mask: int) -> int:
        """rk(X) = max over bases of |B & X| (basis-intersection form)."""
        return max(popcount(b & mask) for b in self.bases)

    def is_independent(self, mask: int) -> bool:
        return self.rank_of(mask) == popcount(mask)

    def is_basis(self, mask: int) -> bool:
        return mask in self._basis_set

    @cached_property
    def _basis_set(self):
        return frozenset(self.bases)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_flat(self, mask: int) -> bool:
        r = self.rank_of(mask)
        rest = self.full_mask & ~mask
        while rest:
            low = rest & -rest
            rest ^= low
            if self.rank_of(mask | low) == r:
                return False
        return True

    def loops(self) -> int:
        """Mask of loops (elements in no basis)."""
        union = 0
        for b in self.bases:
            union |= b
        return self.full_mask & ~union

    def coloops(self) -> int:
        """Mask of coloops (elements in every basis)."""
        inter = self.full_mask
        for b in self.bases:
            inter &= b
        return inter

    # -- serialization -------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "bases": [list(set_of(b)) for b in self.bases]},
            separators=(", ", ": "),
        )

    @classmethod
    def from_json(cls, text: str) -> "Matroid":
        data = json.loads(text)
        return from_bases(data["n"], data["bases"])


def from_bases(ground_size: int, basis_list) -> Matroid:
    """Validated construction from an iterable of element subsets."""
    if ground_size < 0 or ground_size > MAX_GROUND:
        raise ValueError(f"ground size {ground_size} outside 0..{MAX_GROUND}")
    masks = sorted({mask_of(b) for b in basis_list})
    if not masks:
        raise ValueError("basis family must be nonempty")
    sizes = {popcount(m) for m in masks}
    if len(sizes) != 1:
        raise MixedCardinality(f"basis sizes {sorted(sizes)} differ")
    for m in masks:
        if m >> ground_size:
            raise ValueError(f"basis {set_of(m)} exceeds ground set 0..{ground_size - 1}")
    witness = _kernels.exchange_witness(masks, ground_size)
    if witness is not None:
        b1, b2, x = witness
        raise ExchangeViolation(set_of(b1), set_of(b2), x)
    return Matroid._unchecked(ground_size, masks)


def subset_rank(m: Matroid, subset) -> SubsetRankReport:
    mask = mask_of(subset)
    r = m.rank_of(mask)
    size = popcount(mask)
    is_circ = r == size - 1 and all(
        m.is_independent(mask ^ (1 << e)) for e in set_of(mask)
    )
    return SubsetRankReport(
        subset=set_of(mask), rank=r, is_flat=m.is_flat(mask), is_circuit=is_circ
    )


def circuits(m: Matroid) -> list[tuple[int, ...]]:
    """Inclusion-minimal dependent subsets, sorted by (size, elements)."""
    found: list[int] = []
    for size in range(1, m.n + 1):
        for comb in combinations(range(m.n), size):
            mask = mask_of(comb)
            if any(c & mask == c for c in found):
                continue
            if m.rank_of(mask) < size:
                found.append(mask)
    return sorted((set_of(c) for c in found), key=lambda t: (len(t), t))


def dual(m: Matroid) -> Matroid:
    full = m.full_mask
    return Matroid._unchecked(m.n, (full & ~b for b in m.bases))


def _relabel(m: Matroid, keep_mask: int, bases_masks) -> Matroid:
    """Restrict labels to the elements of keep_mask, renumbered 0..k-1."""
    keep = set_of(keep_mask)
    pos = {e: i for i, e in enumerate(keep)}
    out = []
    for b in bases_masks:
        out.append(sum(1 << pos[e] for e in set_of(b)))
    return Matroid._unchecked(len(keep), out)


def delete(m: Matroid, subset) -> Matroid:
    """M \\ X; coloop-aware (rank may drop)."""
    x = mask_of(subset)
    keep = m.full_mask & ~x
    r = m.rank_of(keep)
    new_bases = {b & keep for b in m.bases if popcount(b & keep) == r}
    # bases of M\X are maximal independent subsets of E\X; every one of
    # them arises as B & keep for some basis B of maximal trace
    return _relabel(m, keep, new_bases)


def contract(m: Matroid, subset) -> Matroid:
    """M / X; loop-aware."""
    x = mask_of(subset)
    keep = m.full_mask & ~x
    rx = m.rank_of(x)
    # independent sets of M/X are Y with rk(Y|X) - rk(X) = |Y|;
    # take traces of bases whose intersection with X is maximal
    new_bases = {b & keep for b in m.bases if popcount(b & x) == rx}
    return _relabel(m, keep, new_bases)


def minor(m: Matroid, deleted, contracted) -> Matroid:
    d, c = mask_of(deleted), mask_of(contracted)
    if d & c:
        raise ValueError("deleted and contracted sets intersect")
    out = contract(m, set_of(c))
    # element labels shift after contraction; translate the deletion set
    remaining = [e for e in range(m.n) if not (c >> e) & 1]
    trans = [remaining.index(e) for e in set_of(d)]
    return delete(out, trans)


def connectivity(m: Matroid) -> ConnectivityReport:
    """Components of the circuit-sharing equivalence relation."""
    parent = list(range(m.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for circ in circuits(m):
        for e in circ[1:]:
            union(circ[0], e)
    groups: dict[int, list[int]] = {}
    for e in range(m.n):
        groups.setdefault(find(e), []).append(e)
    comps = tuple(sorted(tuple(g) for g in groups.values()))
    return ConnectivityReport(components=comps, count=len(comps))


def is_connected(m: Matroid) -> bool:
    return m.n <= 1 or connectivity(m).count == 1


# -- isomorphism -------------------------------------------------------


def _incidence_counts(m: Matroid) -> list[int]:
    return [sum(1 for b in m.bases if (b >> e) & 1) for e in range(m.n)]


def _circuit_size_multiset(m: Matroid) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in circuits(m)))


def is_isomorphic(m: Matroid, other: Matroid):
    """An element bijection p (tuple; i -> p[i]) mapping bases onto bases,
    or None. Prunes with rank, basis count, incidence counts, and circuit
    sizes before the permutation search.
    """
    if m.n != other.n or m.rank != other.rank or len(m.bases) != len(other.bases):
        return None
    inc_m = _incidence_counts(m)
    inc_o = _incidence_counts(other)
    if sorted(inc_m) != sorted(inc_o):
        return None
    if _circuit_size_multiset(m) != _circuit_size_multiset(other):
        return None
    target = m.n == other.n and set(other.bases)
    candidates = [
        [f for f in range(other.n) if inc_o[f] == inc_m[e]] for e in range(m.n)
    ]
    perm = [-1] * m.n
    used = [False] * other.n

    def backtrack(e):
        if e == m.n:
            mapped = set()
            for b in m.bases:
                mapped.add(sum(1 << perm[i] for i in set_of(b)))
            return mapped == target
        for f in candidates[e]:
            if used[f]:
                continue
            perm[e] = f
            used[f] = True
            if backtrack(e + 1):
                return True
            used[f] = False
        perm[e] = -1
        return False

    if backtrack(0):
        return tuple(perm)
    return None


def canonical_form(m: Matroid) -> tuple[int, ...]:
    """Lexicographically least relabeled basis family; isomorphism key."""
    return _kernels.canonical_form(m.bases, m.n)


# -- catalog -----------------------------------------------------------

_MK4_LINES = ((0, 1, 2), (0, 3, 4), (1, 4, 5), (2, 3, 5))
# the last line {2,3,5} (= paper labels {3,4,6}) is kept by all three
# line-removed variants so they share MK4's bases/flacets used in the
# Hadamard-rank certificates


def _rank3_from_lines(lines) -> Matroid:
    line_masks = [mask_of(l) for l in lines]
    bases = [
        mask_of(c)
        for c in combinations(range(6), 3)
        if mask_of(c) not in line_masks
    ]
    return Matroid._unchecked(6, bases)


def uniform(n: int, k: int) -> Matroid:
    if not 0 <= k <= n:
        raise ValueError(f"U({n},{k}) undefined")
    return Matroid._unchecked(n, (mask_of(c) for c in combinations(range(n), k)))


def _wheel_matroid(n: int) -> Matroid:
    from .graphs import cone, cycle_graph, graphic_matroid

    return graphic_matroid(cone(cycle_graph(n)))


def _whirl_matroid(n: int) -> Matroid:
    wheel = _wheel_matroid(n)
    rim = mask_of(range(n))
    return Matroid._unchecked(wheel.n, wheel.bases + (rim,))


_NAME_RE = re.compile(r"^[Uu]\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?$")
_WHEEL_RE = re.compile(r"^(wheel|whirl)\s*\(?\s*(\d+)\s*\)?$", re.IGNORECASE)


def catalog(name: str) -> Matroid:
    """Named matroids: U(n,k), MK4, MK5, MK33, W3_whirl, Q6, P6,
    wheel(n), whirl(n).
    """
    key = name.strip()
    m = _NAME_RE.match(key)
    if m:
        return uniform(int(m.group(1)), int(m.group(2)))
    m = _WHEEL_RE.match(key)
    if m:
        n = int(m.group(2))
        if n < 2:
            raise UnknownName(name)
        return _wheel_matroid(n) if m.group(1).lower() == "wheel" else _whirl_matroid(n)
    upper = key.upper()
    if upper == "MK4":
        return _rank3_from_lines(_MK4_LINES)
    if upper == "W3_WHIRL":
        return _rank3_from_lines(_MK4_LINES[1:])
    if upper == "Q6":
        return _rank3_from_lines(_MK4_LINES[2:])
    if upper == "P6":
        return _rank3_from_lines(_MK4_LINES[3:])
    if upper in ("MK5", "MK33"):
        from .graphs import complete_bipartite_graph, complete_graph, graphic_matroid

        g = complete_graph(5) if upper == "MK5" else complete_bipartite_graph(3, 3)
        return graphic_matroid(g)
    raise UnknownName(name)


def running_example() -> Matroid:
    """4-element rank-2 matroid of the triangle with a doubled edge."""
    return from_bases(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
