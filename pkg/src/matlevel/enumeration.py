"""Exhaustive matroid enumeration on small ground sets, minor
containment, excluded-minor searches, and minimally k-level catalogs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import _kernels
from . import geometry as ge
from . import matroid as mt
from .errors import SizeLimit
from .matroid import Matroid, mask_of, set_of

ENUM_MAX_GROUND = 6


@dataclass(frozen=True)
class MinorWitness:
    deleted: tuple[int, ...]
    contracted: tuple[int, ...]
    iso: tuple[int, ...]


def has_minor(m: Matroid, n: Matroid) -> Optional[MinorWitness]:
    """A (delete, contract, isomorphism) witness that N is a minor of M,
    or None. Prunes by rank arithmetic and basis counts before the
    isomorphism search.
    """
    extra = m.n - n.n
    if extra < 0:
        return None
    target_canon = None
    elems = range(m.n)
    for removed in combinations(elems, extra):
        rm = mask_of(removed)
        # contracting c must bring the rank down to rk(N):
        # rk(M / C del D) = rk(M) - rk(C) requires rk(C) = rk(M) - rk(N)
        for csize in range(0, extra + 1):
            for cset in combinations(removed, csize):
                cmask = mask_of(cset)
                if m.rank_of(cmask) != m.rank - n.rank:
                    continue
                dset = tuple(e for e in removed if e not in set(cset))
                cand = mt.minor(m, dset, cset)
                if cand.rank != n.rank or len(cand.bases) != len(n.bases):
                    continue
                perm = mt.is_isomorphic(cand, n)
                if perm is not None:
                    return MinorWitness(deleted=dset, contracted=cset, iso=perm)
    return None


_EXCLUDED = ("MK4", "W3_whirl", "Q6", "P6")


def is_two_level_by_minors(m: Matroid) -> bool:
    """True iff none of the four 3-level excluded minors appears."""
    return all(has_minor(m, mt.catalog(name)) is None for name in _EXCLUDED)


def enumerate_matroids(n: int, r: int, labeled: bool = False) -> list[Matroid]:
    """All rank-r matroids on n elements; isomorphism-class
    representatives unless ``labeled``. Exhaustive scan over basis
    families, so n is capped.
    """
    if n > ENUM_MAX_GROUND:
        raise SizeLimit(f"matroid enumeration capped at n = {ENUM_MAX_GROUND}, got {n}")
    if not 0 <= r <= n:
        return []
    fams = _kernels.scan_families(n, r)
    if labeled:
        return [Matroid._unchecked(n, f) for f in fams]
    seen = set()
    out = []
    for f in fams:
        canon = _kernels.canonical_form(sorted(f), n)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Matroid._unchecked(n, canon))
    return out


def enumerate_all_matroids(n: int, labeled: bool = False) -> list[Matroid]:
    out = []
    for r in range(n + 1):
        out.extend(enumerate_matroids(n, r, labeled=labeled))
    return out


def _single_step_minors(m: Matroid):
    for e in range(m.n):
        yield mt.delete(m, [e])
        yield mt.contract(m, [e])


def minimally_k_level(k: int, n_max: int) -> list[Matroid]:
    """Connected matroids with levelness k whose every single-element
    minor has levelness < k, up to isomorphism. Levelness is
    minor-monotone, so single steps decide minimality.
    """
    if n_max > ENUM_MAX_GROUND:
        raise SizeLimit(f"enumeration capped at n = {ENUM_MAX_GROUND}, got {n_max}")
    out = []
    for n in range(1, n_max + 1):
        for m in enumerate_all_matroids(n):
            if not mt.is_connected(m):
                continue
            if ge.levelness(m)[0] != k:
                continue
            if any(ge.levelness(sub)[0] >= k for sub in _single_step_minors(m)):
                continue
            out.append(m)
    return out


def is_three_connected(m: Matroid) -> bool:
    """No exact 1- or 2-separation (connected with no 2-separation)."""
    from .constructions import _exact_two_separation

    return mt.is_connected(m) and _exact_two_separation(m) is None


def verify_size_bound(k: int) -> bool:
    """Size bound for minimally k-level matroids at k = 3: the witness
    flacet has rank k-1 = 2, so the restriction is a 3-point line and
    the complement has at most 3 elements, 6 in total. Checks that every
    minimally 3-level matroid in the enumeration has exactly 6 elements
    and the expected flacet structure.
    """
    if k != 3:
        raise SizeLimit("size-bound verification supported for k = 3 only")
    found = minimally_k_level(3, ENUM_MAX_GROUND)
    if not found:
        return False
    for m in found:
        if m.n != 6 or not is_three_connected(m):
            return False
        _, wit = ge.levelness(m)
        fm = mask_of(wit.subset)
        if m.rank_of(fm) != k - 1:
            return False
        comp = m.full_mask & ~fm
        if m.rank_of(comp) != mt.popcount(comp):
            return False
    return True


# -- graph-level checks ------------------------------------------------


def graph_excluded_minor_check(k: int, max_edges: int = 6) -> bool:
    """For biconnected simple graphs up to ``max_edges`` edges:
    levelness <= k iff no cone(H) minor with H minimally biconnected on
    k+1 vertices.
    """
    from . import graphs as gr

    if k not in (2, 3, 4):
        raise SizeLimit("graph excluded-minor check supported for k in {2,3,4}")
    excluded = [
        gr.graphic_matroid(gr.cone(h)) for h in gr.minimally_biconnected_graphs(k + 1)
    ]
    for g in gr.biconnected_graphs_up_to_edges(max_edges):
        if not _graph_level_matches(gr.graphic_matroid(g), k, excluded):
            return False
    return True


def _graph_level_matches(m: Matroid, k: int, excluded) -> bool:
    lev = ge.levelness(m)[0]
    clean = all(has_minor(m, x) is None for x in excluded)
    return (lev <= k) == clean


def three_level_graph_decomposition_check(max_edges: int = 6) -> bool:
    """Every 3-level biconnected simple graph decomposes into pieces
    isomorphic to U(2,1) (a doubled edge), U(3,2) (a triangle), U(3,1)
    (its dual), or MK4.
    """
    from . import graphs as gr
    from .constructions import decompose

    allowed = [
        mt.uniform(2, 1),
        mt.uniform(3, 2),
        mt.uniform(3, 1),
        mt.catalog("MK4"),
    ]
    for g in gr.biconnected_graphs_up_to_edges(max_edges):
        m = gr.graphic_matroid(g)
        if ge.levelness(m)[0] > 3:
            continue
        for leaf in decompose(m).leaves():
            if not any(mt.is_isomorphic(leaf, a) is not None for a in allowed):
                return False
    return True
