"""Base configurations, facet enumeration, exact levelness, k-sequences,
and slack matrices of base polytopes.

A facet of the base polytope is either a flacet (a flat F with both the
restriction to F and the contraction by F connected; inequality
sum_{e in F} x_e <= rk(F)) or a set E \\ {e} with both sides connected
(inequality x_e >= 0). The complement type always takes exactly two
values on the configuration.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import constructions as cn
from . import matroid as mt
from .errors import NotConnected
from .matroid import Matroid, mask_of, popcount, set_of


@dataclass(frozen=True)
class PointConfig:
    dim: int
    points: tuple[tuple[Fraction, ...], ...]


def point_config(points) -> PointConfig:
    pts = tuple(tuple(Fraction(c) for c in p) for p in points)
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise ValueError("points have mixed dimensions")
    return PointConfig(dim=dims.pop(), points=tuple(dict.fromkeys(pts)))


@dataclass(frozen=True)
class FacetDescriptor:
    kind: str  # "flacet" | "complement_singleton"
    subset: tuple[int, ...]
    rank_subset: int
    level_values: tuple[int, ...]

    @property
    def levelness(self) -> int:
        return len(self.level_values)


@dataclass(frozen=True)
class SlackMatrix:
    rows: tuple[int, ...]  # basis masks
    cols: tuple[FacetDescriptor, ...]
    entries: tuple[tuple[int, ...], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        header = ["basis"] + [
            "{" + ",".join(map(str, c.subset)) + "}" for c in self.cols
        ]
        buf.write(",".join(header) + "\n")
        for b, row in zip(self.rows, self.entries):
            buf.write(
                "{" + " ".join(map(str, set_of(b))) + "}," + ",".join(map(str, row)) + "\n"
            )
        return buf.getvalue()


def base_configuration(m: Matroid) -> PointConfig:
    pts = tuple(
        tuple(Fraction((b >> e) & 1) for e in range(m.n)) for b in m.bases
    )
    return PointConfig(dim=m.n, points=pts)


def _level_values(m: Matroid, mask: int) -> tuple[int, ...]:
    return tuple(sorted({popcount(b & mask) for b in m.bases}))


def _restriction(m: Matroid, mask: int) -> Matroid:
    r = m.rank_of(mask)
    sub = {b & mask for b in m.bases if popcount(b & mask) == r}
    return mt._relabel(m, mask, sub)


def _contraction_by(m: Matroid, mask: int) -> Matroid:
    keep = m.full_mask & ~mask
    r = m.rank_of(mask)
    sub = {b & keep for b in m.bases if popcount(b & mask) == r}
    return mt._relabel(m, keep, sub)


def flacets(m: Matroid) -> list[FacetDescriptor]:
    """All facets of the base polytope: proper flacets plus complement
    sets E \\ {e} with both M|(E-e) and M/(E-e) connected.
    """
    if not mt.is_connected(m):
        raise NotConnected("facet enumeration requires a connected matroid")
    out = []
    full = m.full_mask
    for size in range(1, m.n - 1):
        for comb in combinations(range(m.n), size):
            mask = mask_of(comb)
            if not m.is_flat(mask):
                continue
            if not mt.is_connected(_restriction(m, mask)):
                continue
            if not mt.is_connected(_contraction_by(m, mask)):
                continue
            out.append(
                FacetDescriptor(
                    kind="flacet",
                    subset=comb,
                    rank_subset=m.rank_of(mask),
                    level_values=_level_values(m, mask),
                )
            )
    for e in range(m.n):
        mask = full ^ (1 << e)
        if m.n >= 2 and mt.is_connected(_restriction(m, mask)) and mt.is_connected(
            _contraction_by(m, mask)
        ):
            out.append(
                FacetDescriptor(
                    kind="complement_singleton",
                    subset=set_of(mask),
                    rank_subset=m.rank_of(mask),
                    level_values=_level_values(m, mask),
                )
            )
    return out


def levelness(m: Matroid) -> tuple[int, FacetDescriptor | None]:
    """(k, witness facet); max over components for disconnected input.
    Matroids whose polytope is a point have levelness 1 and no witness.
    """
    conn = mt.connectivity(m)
    if conn.count > 1:
        best = (1, None)
        for comp in conn.components:
            keep = mask_of(comp)
            sub = _restriction(m, keep)
            k, w = levelness(sub)
            if k > best[0]:
                best = (k, w)
        return best
    facets = flacets(m)
    if not facets:
        return (1, None)
    wit = max(facets, key=lambda f: f.levelness)
    return (wit.levelness, wit)


def k_sequence(m: Matroid, f: FacetDescriptor) -> list[int]:
    """Chain of basis masks B_1..B_k with |B_i & F| increasing by one
    from min to rk(F) and nested intersections with F.
    """
    fm = mask_of(f.subset)
    values = f.level_values
    by_val: dict[int, list[int]] = {}
    for b in m.bases:
        by_val.setdefault(popcount(b & fm), []).append(b)

    def extend(chain, val_idx):
        if val_idx == len(values):
            return chain
        prev = chain[-1] & fm if chain else 0
        for b in by_val.get(values[val_idx], ()):
            if chain and (prev & (b & fm)) != prev:
                continue
            got = extend(chain + [b], val_idx + 1)
            if got:
                return got
        return None

    out = extend([], 0)
    if out is None:
        raise AssertionError("no k-sequence found; facet data inconsistent")
    return out


def slack_matrix(m: Matroid) -> SlackMatrix:
    cols = tuple(flacets(m))
    rows = tuple(m.bases)
    entries = tuple(
        tuple(c.rank_subset - popcount(b & mask_of(c.subset)) for c in cols)
        for b in rows
    )
    return SlackMatrix(rows=rows, cols=cols, entries=entries)


def face_restriction(m: Matroid, subset) -> Matroid:
    """The face of the base polytope cut by sum_{e in X} x_e = rk(X) is
    the base configuration of M|_X (+) M/X; returns that direct sum with
    M|_X elements first.
    """
    mask = mask_of(subset)
    return cn.direct_sum(_restriction(m, mask), _contraction_by(m, mask))


def projection_to(v: PointConfig, coords) -> PointConfig:
    cs = list(coords)
    pts = tuple(dict.fromkeys(tuple(p[c] for c in cs) for p in v.points))
    return PointConfig(dim=len(cs), points=pts)


# -- brute-force hull oracle (test reference) --------------------------


def hull_facets(v: PointConfig):
    """Facet list of conv(points) by exact rational enumeration: every
    affinely independent (adim)-subset spans a candidate hyperplane;
    keep those with all points on one side, touching an adim-dim face.
    Returns a set of canonical (normal, offset) pairs restricted to the
    affine hull. Desk scale only.
    """
    pts = v.points
    d = v.dim
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    adim = _rank_rows(diffs)
    facets = set()
    for comb in combinations(range(len(pts)), adim):
        sub = [pts[i] for i in comb]
        rel = [tuple(a - b for a, b in zip(p, sub[0])) for p in sub[1:]]
        if _rank_rows(rel) != adim - 1:
            continue
        normal = _hyperplane_normal(pts, sub, d)
        if normal is None:
            continue
        a, beta = normal
        vals = [sum(x * c for x, c in zip(p, a)) for p in pts]
        if all(val <= beta for val in vals):
            facets.add((a, beta))
        elif all(val >= beta for val in vals):
            facets.add((tuple(-x for x in a), -beta))
    # a candidate is a real facet iff its touching set is not contained
    # in another candidate's touching set
    def touching(f):
        a, beta = f
        return frozenset(
            i for i, p in enumerate(pts) if sum(x * c for x, c in zip(p, a)) == beta
        )

    by_touch = {}
    for f in facets:
        by_touch.setdefault(touching(f), f)
    keys = list(by_touch)
    keep = []
    for t in keys:
        if not any(t < u for u in keys):
            keep.append(by_touch[t])
    return {touching(f) for f in keep}


def _rank_rows(rows) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        for i in range(row + 1, len(mat)):
            if mat[i][col]:
                fac = mat[i][col] / pv
                mat[i] = [x - fac * y for x, y in zip(mat[i], mat[row])]
        row += 1
        rank += 1
    return rank


def _hyperplane_normal(pts, sub, d):
    """Normal of a hyperplane through sub within the affine hull of pts:
    solve for a with a . (p - sub[0]) = 0 for p in sub and a in the span
    of the hull's directions (so the answer is unique up to scale).
    """
    base = pts[0]
    dirs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    span = _row_basis(dirs)
    rel = [tuple(a - b for a, b in zip(p, sub[0])) for p in sub[1:]]
    # a = sum c_i span_i with rel . a = 0
    k = len(span)
    sys_rows = [
        [sum(span[i][j] * r[j] for j in range(d)) for i in range(k)] for r in rel
    ]
    null = _nullspace(sys_rows, k)
    if len(null) != 1:
        return None
    c = null[0]
    a = tuple(sum(c[i] * span[i][j] for i in range(k)) for j in range(d))
    beta = sum(x * y for x, y in zip(a, sub[0]))
    # canonical scale: first nonzero = 1
    lead = next((x for x in a if x), None)
    if lead is None:
        return None
    a = tuple(x / lead for x in a)
    return a, beta / lead


def _row_basis(rows):
    basis = []
    for r in rows:
        cand = list(r)
        for b in basis:
            lead = next((j for j, x in enumerate(b) if x), None)
            if lead is not None and cand[lead]:
                fac = cand[lead] / b[lead]
                cand = [x - fac * y for x, y in zip(cand, b)]
        if any(cand):
            basis.append(cand)
    return basis


def _nullspace(rows, ncols):
    mat = [list(r) for r in rows]
    pivots = {}
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        mat[row] = [x / pv for x in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col]:
                fac = mat[i][col]
                mat[i] = [x - fac * y for x, y in zip(mat[i], mat[row])]
        pivots[col] = row
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for col, r in pivots.items():
            vec[col] = -mat[r][fc]
        out.append(tuple(vec))
    return out
