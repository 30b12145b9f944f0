"""Pure-Python implementations of the hot kernels.

Same contracts as the compiled versions in ``_speedups``; used as the
fallback backend and as the reference in the kernel benchmark.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations

BACKEND = "pure"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def exchange_witness(bases, n):
    """First triple (B1, B2, x) violating basis exchange, or None.

    ``bases`` is a sequence of bitmasks over ground set 0..n-1.
    """
    fam = set(bases)
    members = sorted(fam)
    for b1 in members:
        for b2 in members:
            if b1 == b2:
                continue
            only2 = b2 & ~b1
            for x in _bits(b1 & ~b2):
                removed = b1 ^ (1 << x)
                for y in _bits(only2):
                    if removed | (1 << y) in fam:
                        break
                else:
                    return (b1, b2, x)
    return None


def scan_families(n, r):
    """All nonempty families of r-subsets of 0..n-1 satisfying exchange.

    Returns a list of tuples of sorted bitmasks. Exhaustive over the
    2^C(n,r) candidate families, so callers keep n small.
    """
    subsets = [sum(1 << e for e in c) for c in combinations(range(n), r)]
    m = len(subsets)
    out = []
    for fam_bits in range(1, 1 << m):
        members = []
        fb = fam_bits
        idx = 0
        while fb:
            if fb & 1:
                members.append(subsets[idx])
            fb >>= 1
            idx += 1
        # membership word over masks (masks < 2^n <= 64 bits here)
        word = 0
        for b in members:
            word |= 1 << b
        ok = True
        for b1 in members:
            if not ok:
                break
            for b2 in members:
                if b1 == b2:
                    continue
                only2 = b2 & ~b1
                d1 = b1 & ~b2
                bad = False
                while d1:
                    low = d1 & -d1
                    d1 ^= low
                    removed = b1 ^ low
                    d2 = only2
                    found = False
                    while d2:
                        low2 = d2 & -d2
                        d2 ^= low2
                        if (word >> (removed | low2)) & 1:
                            found = True
                            break
                    if not found:
                        bad = True
                        break
                if bad:
                    ok = False
                    break
        if ok:
            out.append(tuple(members))
    return out


@lru_cache(maxsize=16)
def _perms(n):
    return list(permutations(range(n)))


def _apply_perm(mask, perm):
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def canonical_form(bases, n):
    """Lexicographically least sorted mask tuple over all relabelings."""
    best = None
    for perm in _perms(n):
        cand = tuple(sorted(_apply_perm(b, perm) for b in bases))
        if best is None or cand < best:
            best = cand
    return best


def qroot2_rank(rows):
    """Rank of a matrix over Q(sqrt2); entries are (a, b) = a + b*sqrt2.

    Components may be ints or Fractions; fraction-free Bareiss elimination
    over the ring generated by the entries (divisions are exact).
    """
    mat = [[(Fraction(a), Fraction(b)) for (a, b) in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    prev = (Fraction(1), Fraction(0))
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, nrows):
            a, b = mat[i][col]
            if a or b:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        pa, pb = mat[row][col]
        div_a, div_b = prev
        norm = div_a * div_a - 2 * div_b * div_b
        for i in range(row + 1, nrows):
            ca, cb = mat[i][col]
            for j in range(col, ncols):
                xa, xb = mat[i][j]
                ya, yb = mat[row][j]
                # pivot*entry - col_entry*pivot_row, then exact /prev
                ta = pa * xa + 2 * pb * xb - (ca * ya + 2 * cb * yb)
                tb = pa * xb + pb * xa - (ca * yb + cb * ya)
                if div_a != 1 or div_b != 0:
                    ua = ta * div_a - 2 * tb * div_b
                    ub = tb * div_a - ta * div_b
                    ta = ua / norm
                    tb = ub / norm
                mat[i][j] = (ta, tb)
        prev = (pa, pb)
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank
