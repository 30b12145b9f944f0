"""Direct sums, series/parallel connections, 2-sums, and decomposition
of matroids into 3-connected pieces.

Gluing operations relabel ground sets disjointly: in the result of a
binary operation, elements of M1 keep their indices and elements of M2
are shifted. Base points are removed (2-sum) or merged (series/parallel,
merged point gets the slot of p1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import matroid as mt
from .errors import (
    BasePointColoop,
    BasePointDegenerate,
    BasePointLoop,
)
from .matroid import Matroid, popcount, set_of


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    bases = [b1 | (b2 << m1.n) for b1 in m1.bases for b2 in m2.bases]
    return Matroid._unchecked(m1.n + m2.n, bases)


def _move_to_front(m: Matroid, p: int) -> Matroid:
    """Relabel so the base point becomes element 0."""
    perm = [p] + [e for e in range(m.n) if e != p]
    inv = {e: i for i, e in enumerate(perm)}
    return Matroid._unchecked(m.n, (sum(1 << inv[e] for e in set_of(b)) for b in m.bases))


def _is_coloop(m: Matroid, p: int) -> bool:
    return all((b >> p) & 1 for b in m.bases)


def _is_loop(m: Matroid, p: int) -> bool:
    return not any((b >> p) & 1 for b in m.bases)


def series_connection(m1: Matroid, p1: int, m2: Matroid, p2: int) -> Matroid:
    """Glue at the identified point p; bases are disjoint unions B1 u B2
    covering p at most once, of maximal size. The merged point keeps slot
    p1; elements of m2 follow, shifted past m1.
    """
    if _is_coloop(m1, p1) and _is_coloop(m2, p2):
        raise BasePointColoop("base point is a coloop of both parts")
    a = _move_to_front(m1, p1)
    b = _move_to_front(m2, p2)
    # ground: p=0, elements of a at 1..n1-1, elements of b at n1..n1+n2-2
    n = a.n + b.n - 1
    cand = set()
    for b1 in a.bases:
        for b2 in b.bases:
            if b1 & b2 & 1:
                continue
            cand.add(b1 | ((b2 >> 1) << a.n) | ((b2 & 1) and 1))
    size = max(popcount(c) for c in cand)
    bases = [c for c in cand if popcount(c) == size]
    out = Matroid._unchecked(n, bases)
    # restore requested labeling: p at slot p1, m1 elements in place,
    # m2 elements shifted with p2's slot removed
    perm = {}
    src = 0
    order1 = [p1] + [e for e in range(m1.n) if e != p1]
    for e in order1:
        perm[src] = e
        src += 1
    order2 = [e for e in range(m2.n) if e != p2]
    for e in order2:
        perm[src] = m1.n + e - (1 if e > p2 else 0)
        src += 1
    return Matroid._unchecked(n, (sum(1 << perm[e] for e in set_of(bm)) for bm in out.bases))


def parallel_connection(m1: Matroid, p1: int, m2: Matroid, p2: int) -> Matroid:
    if _is_loop(m1, p1) and _is_loop(m2, p2):
        raise BasePointLoop("base point is a loop of both parts")
    d = series_connection(mt.dual(m1), p1, mt.dual(m2), p2)
    return mt.dual(d)


def two_sum(m1: Matroid, p1: int, m2: Matroid, p2: int) -> Matroid:
    """S(M1, M2) / p; bases are B1 u B2 \\ p with p in exactly one of
    the two. Elements: m1's (minus p1, shifted down past p1) then m2's
    (minus p2, shifted likewise).
    """
    for m, p in ((m1, p1), (m2, p2)):
        if _is_loop(m, p) or _is_coloop(m, p):
            raise BasePointDegenerate(f"base point {p} is a loop or coloop")
    n1, n2 = m1.n - 1, m2.n - 1

    def drop(mask: int, p: int) -> int:
        low = mask & ((1 << p) - 1)
        high = mask >> (p + 1)
        return low | (high << p)

    bases = []
    for b1 in m1.bases:
        in1 = (b1 >> p1) & 1
        x1 = drop(b1, p1)
        for b2 in m2.bases:
            if in1 == (b2 >> p2) & 1:
                continue
            bases.append(x1 | (drop(b2, p2) << n1))
    return Matroid._unchecked(n1 + n2, bases)


# -- decomposition -----------------------------------------------------


@dataclass(frozen=True)
class DecompositionTree:
    """kind in {"leaf", "direct_sum", "two_sum"}; leaf carries a
    matroid, two_sum nodes carry the two children plus the element sets
    (as original-ground-set labels) its parts cover.
    """

    kind: str
    matroid: Optional[Matroid] = None
    children: tuple = ()
    parts: tuple = ()

    def leaves(self):
        if self.kind == "leaf":
            yield self.matroid
        else:
            for c in self.children:
                yield from c.leaves()

    def to_json(self) -> str:
        return json.dumps(self._as_obj(), separators=(", ", ": "))

    def _as_obj(self):
        if self.kind == "leaf":
            m = self.matroid
            for name in _LEAF_NAMES:
                if mt.is_isomorphic(m, mt.catalog(name)) is not None:
                    return {"leaf": name}
            if len(m.bases) == _binom(m.n, m.rank):
                return {"leaf": f"U({m.n},{m.rank})"}
            return {"leaf": {"n": m.n, "bases": [list(set_of(b)) for b in m.bases]}}
        return {self.kind: [c._as_obj() for c in self.children]}


_LEAF_NAMES = ("MK4", "W3_whirl", "Q6", "P6")


def _binom(n, k):
    from math import comb

    return comb(n, k)


def _exact_two_separation(m: Matroid):
    """Lexicographically least A with |A|,|B| >= 2 and
    rk(A) + rk(B) = rk(E) + 1, or None.
    """
    elems = list(range(m.n))
    full = m.full_mask
    for size in range(2, m.n - 1):
        for comb in combinations(elems, size):
            a = mt.mask_of(comb)
            b = full & ~a
            if m.rank_of(a) + m.rank_of(b) == m.rank + 1:
                return a
    return None


def _side_matroid(m: Matroid, a_mask: int):
    """Part of a 2-sum across the separation (A, E\\A): bases are traces
    B & A, augmented with the base point when the trace is one short of
    rk(A). Returns (matroid, tags) where tags map its elements to
    ('e', original index) or ('p', None).
    """
    ra = m.rank_of(a_mask)
    elems = set_of(a_mask)
    pos = {e: i for i, e in enumerate(elems)}
    p_slot = len(elems)
    bases = set()
    for b in m.bases:
        t = b & a_mask
        k = popcount(t)
        mask = sum(1 << pos[e] for e in set_of(t))
        if k == ra:
            bases.add(mask)
        elif k == ra - 1:
            bases.add(mask | (1 << p_slot))
    tags = tuple([("e", e) for e in elems] + [("p", None)])
    return Matroid._unchecked(len(elems) + 1, sorted(bases)), tags


def decompose(m: Matroid) -> DecompositionTree:
    """Split by connected components, then by exact 2-separations, until
    every leaf is 3-connected (or too small to split). The recomposition
    of every 2-sum node is checked against the matroid it came from.
    """
    conn = mt.connectivity(m)
    if conn.count > 1:
        children = []
        for comp in conn.components:
            keep = mt.mask_of(comp)
            ra = m.rank_of(keep)
            sub = {b & keep for b in m.bases if popcount(b & keep) == ra}
            children.append(decompose(mt._relabel(m, keep, sub)))
        return DecompositionTree(kind="direct_sum", children=tuple(children))
    if m.n <= 3:
        return DecompositionTree(kind="leaf", matroid=m)
    a_mask = _exact_two_separation(m)
    if a_mask is None:
        return DecompositionTree(kind="leaf", matroid=m)
    b_mask = m.full_mask & ~a_mask
    ma, tags_a = _side_matroid(m, a_mask)
    mb, tags_b = _side_matroid(m, b_mask)
    # validate: recompose and demand exact equality with m
    glued = two_sum(ma, ma.n - 1, mb, mb.n - 1)
    order = list(set_of(a_mask)) + list(set_of(b_mask))
    inv = {i: e for i, e in enumerate(order)}
    relabeled = Matroid._unchecked(
        m.n, (sum(1 << inv[i] for i in set_of(b)) for b in glued.bases)
    )
    if relabeled != m:
        raise AssertionError("2-sum recomposition mismatch")
    return DecompositionTree(
        kind="two_sum",
        children=(decompose(ma), decompose(mb)),
        parts=(set_of(a_mask), set_of(b_mask)),
    )


def is_uniform(m: Matroid) -> bool:
    return len(m.bases) == _binom(m.n, m.rank)


def is_two_level_by_decomposition(m: Matroid) -> bool:
    """True iff every 3-connected leaf of the decomposition is uniform."""
    return all(is_uniform(leaf) for leaf in decompose(m).leaves())
