# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exchange checks, matroid-family scans, canonical
forms, and exact rank over Z[sqrt2].

Contracts mirror ``_pure``; the dispatcher in ``__init__`` guards the
input ranges (ground sets <= 6 for the scan word trick, small integer
matrices for the int64 Bareiss rank).
"""

from itertools import combinations, permutations

BACKEND = "c"


def exchange_witness(bases, int n):
    """First (B1, B2, x) mask triple violating exchange, or None."""
    cdef list members = sorted(set(bases))
    cdef int m = len(members)
    cdef int i, j, x, found
    cdef unsigned int b1, b2, d1, only2, low, removed, d2, low2
    cdef unsigned long long word = 0
    if n > 6:
        from . import _pure
        return _pure.exchange_witness(bases, n)
    for i in range(m):
        word |= 1ULL << <unsigned int>members[i]
    for i in range(m):
        b1 = members[i]
        for j in range(m):
            if i == j:
                continue
            b2 = members[j]
            only2 = b2 & ~b1
            d1 = b1 & ~b2
            while d1:
                low = d1 & (-<int>d1)
                d1 ^= low
                removed = b1 ^ low
                d2 = only2
                found = 0
                while d2:
                    low2 = d2 & (-<int>d2)
                    d2 ^= low2
                    if (word >> (removed | low2)) & 1ULL:
                        found = 1
                        break
                if not found:
                    x = 0
                    while not (low >> x) & 1:
                        x += 1
                    return (int(b1), int(b2), x)
    return None


def scan_families(int n, int r):
    """All nonempty exchange-valid families of r-subsets of 0..n-1."""
    if n > 6:
        from . import _pure
        return _pure.scan_families(n, r)
    subs_py = [sum(1 << e for e in c) for c in combinations(range(n), r)]
    cdef int m = len(subs_py)
    cdef unsigned int subs[64]
    cdef unsigned int mem[64]
    cdef int i, j, k, cnt, ok, found
    cdef unsigned long long fam, word, fb
    cdef unsigned int b1, b2, d1, only2, low, removed, d2, low2
    for i in range(m):
        subs[i] = subs_py[i]
    out = []
    for fam in range(1, 1ULL << m):
        cnt = 0
        word = 0
        fb = fam
        i = 0
        while fb:
            if fb & 1ULL:
                mem[cnt] = subs[i]
                word |= 1ULL << subs[i]
                cnt += 1
            fb >>= 1
            i += 1
        ok = 1
        for j in range(cnt):
            if not ok:
                break
            b1 = mem[j]
            for k in range(cnt):
                if j == k:
                    continue
                b2 = mem[k]
                only2 = b2 & ~b1
                d1 = b1 & ~b2
                while d1:
                    low = d1 & (-<int>d1)
                    d1 ^= low
                    removed = b1 ^ low
                    d2 = only2
                    found = 0
                    while d2:
                        low2 = d2 & (-<int>d2)
                        d2 ^= low2
                        if (word >> (removed | low2)) & 1ULL:
                            found = 1
                            break
                    if not found:
                        ok = 0
                        break
                if not ok:
                    break
        if ok:
            out.append(tuple(int(mem[i]) for i in range(cnt)))
    return out


def canonical_form(bases, int n):
    """Lexicographically least sorted mask tuple over all relabelings."""
    cdef int nb = len(bases)
    cdef unsigned int orig[64]
    cdef unsigned int cur[64]
    cdef unsigned int best[64]
    cdef int p[16]
    cdef int i, j, t, have_best, cmp_res
    cdef unsigned int mask, out_mask, low
    if nb > 64 or n > 16:
        from . import _pure
        return _pure.canonical_form(bases, n)
    for i in range(nb):
        orig[i] = bases[i]
    have_best = 0
    for perm in permutations(range(n)):
        for i in range(n):
            p[i] = perm[i]
        for i in range(nb):
            mask = orig[i]
            out_mask = 0
            while mask:
                low = mask & (-<int>mask)
                j = 0
                while not (low >> j) & 1:
                    j += 1
                out_mask |= 1U << p[j]
                mask ^= low
            cur[i] = out_mask
        # insertion sort (nb small)
        for i in range(1, nb):
            mask = cur[i]
            t = i - 1
            while t >= 0 and cur[t] > mask:
                cur[t + 1] = cur[t]
                t -= 1
            cur[t + 1] = mask
        if not have_best:
            for i in range(nb):
                best[i] = cur[i]
            have_best = 1
        else:
            cmp_res = 0
            for i in range(nb):
                if cur[i] < best[i]:
                    cmp_res = -1
                    break
                if cur[i] > best[i]:
                    cmp_res = 1
                    break
            if cmp_res < 0:
                for i in range(nb):
                    best[i] = cur[i]
    return tuple(int(best[i]) for i in range(nb))


def qroot2_rank(rows):
    """Rank over Q(sqrt2) of a small integer matrix of (a, b) pairs.

    int64 Bareiss; the dispatcher only routes matrices small enough that
    intermediate minors cannot overflow.
    """
    cdef int nrows = len(rows)
    cdef int ncols = len(rows[0]) if nrows else 0
    cdef long long a[16][16]
    cdef long long b[16][16]
    cdef int i, j, col, row, piv, rank
    cdef long long pa, pb, ca, cb, ta, tb, ua, ub, norm, da, db, tmp
    if nrows > 16 or ncols > 16:
        from . import _pure
        return _pure.qroot2_rank(rows)
    for i in range(nrows):
        for j in range(ncols):
            a[i][j] = rows[i][j][0]
            b[i][j] = rows[i][j][1]
    rank = 0
    row = 0
    da = 1
    db = 0
    for col in range(ncols):
        piv = -1
        for i in range(row, nrows):
            if a[i][col] != 0 or b[i][col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(ncols):
                tmp = a[row][j]; a[row][j] = a[piv][j]; a[piv][j] = tmp
                tmp = b[row][j]; b[row][j] = b[piv][j]; b[piv][j] = tmp
        pa = a[row][col]
        pb = b[row][col]
        norm = da * da - 2 * db * db
        for i in range(row + 1, nrows):
            ca = a[i][col]
            cb = b[i][col]
            for j in range(col, ncols):
                ta = pa * a[i][j] + 2 * pb * b[i][j] - (ca * a[row][j] + 2 * cb * b[row][j])
                tb = pa * b[i][j] + pb * a[i][j] - (ca * b[row][j] + cb * a[row][j])
                if da != 1 or db != 0:
                    ua = ta * da - 2 * tb * db
                    ub = tb * da - ta * db
                    ta = ua // norm
                    tb = ub // norm
                a[i][j] = ta
                b[i][j] = tb
        da = pa
        db = pb
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank
