"""Vanishing ideals of finite rational point sets: Groebner data via
evaluation elimination, generation-degree tests, and separation degrees.

All arithmetic is exact (Fraction); the term order is graded reverse
lexicographic with variables ordered by coordinate index.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import DuplicatePoints, NonNegativeAtP, PointInV
from .geometry import PointConfig

Monomial = tuple[int, ...]
Polynomial = dict[Monomial, Fraction]


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def poly_degree(p: Polynomial) -> int:
    return max((sum(m) for m in p), default=0)


def poly_str(p: Polynomial) -> str:
    if not p:
        return "0"
    terms = []
    for m in sorted(p, key=_grevlex_key, reverse=True):
        c = p[m]
        mono = "*".join(
            f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m) if e
        )
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def eval_monomial(m: Monomial, point) -> Fraction:
    out = Fraction(1)
    for e, x in zip(m, point):
        if e:
            out *= x**e
    return out


def eval_poly(p: Polynomial, point) -> Fraction:
    return sum((c * eval_monomial(m, point) for m, c in p.items()), Fraction(0))


@dataclass(frozen=True)
class GroebnerData:
    basis: tuple[Polynomial, ...]
    standard_monomials: tuple[Monomial, ...]
    hilbert: tuple[int, ...]  # dim I(V)_{<=d} for d = 0..max needed

    @property
    def max_degree(self) -> int:
        return max(poly_degree(g) for g in self.basis) if self.basis else 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "basis": [
                    {str(list(m)): str(c) for m, c in sorted(g.items(), key=lambda t: _grevlex_key(t[0]))}
                    for g in self.basis
                ],
                "standard_monomials": [list(m) for m in self.standard_monomials],
                "hilbert": list(self.hilbert),
            },
            separators=(", ", ": "),
        )


def _divisible(m: Monomial, by: Monomial) -> bool:
    return all(a >= b for a, b in zip(m, by))


def vanishing_ideal(v: PointConfig) -> GroebnerData:
    """Reduced grevlex Groebner basis of the vanishing ideal by the
    evaluation-elimination method: walk monomials in term order; a
    monomial whose evaluation vector depends on those of the standard
    monomials so far yields a basis element, and its multiples are
    pruned from the queue.
    """
    pts = v.points
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("points must be distinct")
    n, npts = v.dim, len(pts)
    one: Monomial = (0,) * n
    # queue ordered by grevlex; seeded with 1, extended by var * std
    heap = [(_grevlex_key(one), one)]
    seen = {one}
    leading: list[Monomial] = []
    std: list[Monomial] = []
    std_rows: list[list[Fraction]] = []  # reduced evaluation vectors
    reducers: list[Polynomial] = []  # row i reduced form as polynomial
    pivots: list[int] = []
    basis: list[Polynomial] = []
    while heap:
        _, mono = heapq.heappop(heap)
        if any(_divisible(mono, lt) for lt in leading):
            continue
        vec = [eval_monomial(mono, p) for p in pts]
        combo: Polynomial = {mono: Fraction(1)}
        for row, red, piv in zip(std_rows, reducers, pivots):
            if vec[piv]:
                fac = vec[piv] / row[piv]
                vec = [a - fac * b for a, b in zip(vec, row)]
                for m, c in red.items():
                    combo[m] = combo.get(m, Fraction(0)) - fac * c
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            basis.append({m: c for m, c in combo.items() if c})
            leading.append(mono)
        else:
            std.append(mono)
            std_rows.append(vec)
            reducers.append({m: c for m, c in combo.items() if c})
            pivots.append(piv)
            if len(std) < npts:
                for i in range(n):
                    nxt = tuple(e + (1 if j == i else 0) for j, e in enumerate(mono))
                    if nxt not in seen:
                        seen.add(nxt)
                        heapq.heappush(heap, (_grevlex_key(nxt), nxt))
    # tail-reduce each basis element against standard monomials is
    # already done (combo built from reduced rows); auto-reduce leading
    # terms across basis elements happens by construction (each leading
    # monomial is minimal, not divisible by any earlier one)
    maxdeg = max((poly_degree(g) for g in basis), default=0)
    hilbert = tuple(_ideal_dim(std, basis, d, n) for d in range(maxdeg + 1))
    return GroebnerData(
        basis=tuple(basis), standard_monomials=tuple(std), hilbert=hilbert
    )


def _count_monomials(n: int, d: int) -> int:
    from math import comb

    return comb(n + d, d)


def _ideal_dim(std, basis, d, n) -> int:
    """dim I(V)_{<=d} = (# monomials of deg <= d) - (# std monos <= d)."""
    nstd = sum(1 for m in std if sum(m) <= d)
    return _count_monomials(n, d) - nstd


def _monomials_up_to(n: int, d: int):
    out = []
    for deg in range(d + 1):
        for comb in combinations_with_replacement(range(n), deg):
            m = [0] * n
            for i in comb:
                m[i] += 1
            out.append(tuple(m))
    return sorted(out, key=_grevlex_key)


def ideal_dim_at(v: PointConfig, d: int) -> int:
    """dim I(V)_{<=d} by evaluation rank; independent of Groebner data."""
    monos = _monomials_up_to(v.dim, d)
    rank = _eval_rank(monos, v.points)
    return len(monos) - rank


def _eval_rank(monos, pts) -> int:
    rows = [[eval_monomial(m, p) for p in pts] for m in monos]
    return _frac_rank(rows)


def _frac_rank(rows) -> int:
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        for i in range(row + 1, nrows):
            if mat[i][col]:
                fac = mat[i][col] / pv
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def _mul_mono(p: Polynomial, m: Monomial) -> Polynomial:
    return {tuple(a + b for a, b in zip(mono, m)): c for mono, c in p.items()}


def generation_degree_at_most(v: PointConfig, k: int) -> bool:
    """True iff the ideal generated by I(V)_{<=k} is all of I(V).

    Fast sufficient check first: if for every degree d up to the max
    Groebner basis degree the span of {m * f : f in I(V)_{<=k},
    deg(m f) <= d} has the dimension of I(V)_{<=d}, the low part
    generates. A dimension shortfall is not a refutation (products of
    higher degree can cancel down), so the verdict then falls to an
    exact membership test: reduce every Groebner element of degree > k
    against a Groebner basis of the ideal generated by the low part.
    """
    gb = vanishing_ideal(v)
    maxdeg = gb.max_degree
    if maxdeg <= k:
        return True
    low = [g for g in gb.basis if poly_degree(g) <= k]
    if not low:
        return False
    # vector-space basis of I_{<=k}: Groebner elements of degree <= k
    # times monomials keeping degree <= k
    gens: list[Polynomial] = []
    for g in low:
        dg = poly_degree(g)
        for m in _monomials_up_to(v.dim, k - dg):
            gens.append(_mul_mono(g, m))
    spanning = True
    for d in range(k + 1, maxdeg + 1):
        monos = _monomials_up_to(v.dim, d)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in gens:
            dg = poly_degree(g)
            for m in _monomials_up_to(v.dim, d - dg):
                prod = _mul_mono(g, m)
                row = [Fraction(0)] * len(monos)
                for mono, c in prod.items():
                    row[index[mono]] = c
                rows.append(row)
        want = gb.hilbert[d] if d < len(gb.hilbert) else _ideal_dim(
            gb.standard_monomials, gb.basis, d, v.dim
        )
        if _frac_rank(rows) != want:
            spanning = False
            break
    if spanning:
        return True
    high = [g for g in gb.basis if poly_degree(g) > k]
    return _all_in_generated_ideal(low, high, v.dim)


def _to_sympy(p: Polynomial, xs):
    import sympy as sp

    return sp.Add(
        *[
            sp.Rational(c) * sp.Mul(*[xs[i] ** e for i, e in enumerate(m) if e])
            for m, c in p.items()
        ]
    )


def _all_in_generated_ideal(gens, targets, n) -> bool:
    import sympy as sp

    xs = sp.symbols(f"x0:{n}")
    basis = sp.groebner([_to_sympy(g, xs) for g in gens], *xs, order="grevlex")
    return all(basis.reduce(_to_sympy(t, xs))[1] == 0 for t in targets)


def separation_degree(v: PointConfig, p) -> int:
    """Smallest d such that some degree-<=d polynomial vanishes on V and
    not at p; found where dim I(V)_{<=d} exceeds dim I(V u {p})_{<=d}.
    """
    pt = tuple(Fraction(c) for c in p)
    if pt in v.points:
        raise PointInV(f"{p} lies in the configuration")
    vp = PointConfig(dim=v.dim, points=v.points + (pt,))
    d = 1
    while True:
        if ideal_dim_at(v, d) > ideal_dim_at(vp, d):
            return d
        d += 1
        if d > len(v.points) + 1:
            raise AssertionError("separation degree exceeded interpolation bound")


def theta_lower_bound_from_separation(v: PointConfig, ell, p) -> int:
    """Certified lower bound on the Theta rank from a separating point.

    ``ell`` maps a point to the facet functional's value; it must be
    nonnegative on V and negative at p. A k-sos identity for ell gives a
    degree-2k polynomial vanishing on V and nonzero at p, so
    sep(V, p) <= 2k; the bound returned is the largest ruled-out k plus
    one, i.e. Th >= floor((sep - 1) / 2) + 1.
    """
    pt = tuple(Fraction(c) for c in p)
    if ell(pt) >= 0:
        raise NonNegativeAtP(f"functional is nonnegative at {p}")
    sep = separation_degree(v, pt)
    return (sep - 1) // 2 + 1
