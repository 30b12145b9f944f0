import random
from fractions import Fraction
from itertools import combinations

import pytest

from matlevel import matroid as mt


def rank_of_columns(mat, cols):
    rows = [[Fraction(mat[i][j]) for j in cols] for i in range(len(mat))]
    rank = 0
    row = 0
    for col in range(len(cols)):
        piv = next((i for i in range(row, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        pv = rows[row][col]
        for i in range(row + 1, len(rows)):
            if rows[i][col]:
                fac = rows[i][col] / pv
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[row])]
        row += 1
        rank += 1
    return rank


def random_linear_matroid(rng: random.Random, n: int, r: int) -> mt.Matroid:
    """Column matroid of a random small integer matrix; retries until
    the matrix has full row rank r.
    """
    while True:
        mat = [[rng.randint(0, 2) for _ in range(n)] for _ in range(r)]
        if rank_of_columns(mat, list(range(n))) != r:
            continue
        bases = [
            c for c in combinations(range(n), r) if rank_of_columns(mat, list(c)) == r
        ]
        return mt.from_bases(n, bases)


@pytest.fixture(scope="session")
def excluded_minors():
    return {name: mt.catalog(name) for name in ("MK4", "W3_whirl", "Q6", "P6")}
