"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from multihilbert.points import PointSet, normalize


def naive_rank(rows) -> int:
    """Gaussian elimination with rational division and partial pivoting on the first nonzero."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def matrix_with_margins_exists(alpha, beta) -> bool:
    """Exhaustive search for a |beta| x |alpha| (0,1)-matrix with the given margins.

    Columns are filled one at a time over every choice of rows; a branch is cut
    only when some row would exceed its required sum.
    """
    if sum(alpha) != sum(beta):
        return False
    rows = len(beta)

    def fill(c, remaining):
        if c == len(alpha):
            return all(v == 0 for v in remaining)
        for chosen in itertools.combinations(range(rows), alpha[c]):
            if all(remaining[r] > 0 for r in chosen):
                nxt = list(remaining)
                for r in chosen:
                    nxt[r] -= 1
                if fill(c + 1, nxt):
                    return True
        return False

    return fill(0, list(beta))


def partitions_of(n: int):
    """All partitions of n, largest part first."""
    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for p in range(min(n, cap), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest
    return list(gen(n, n))


def random_point_set(rng: random.Random, dims, s: int, lo: int = 0, hi: int = 6) -> PointSet:
    """s distinct random points with integer coordinates in [lo, hi]; duplicates are redrawn."""
    pts = {}
    while len(pts) < s:
        raw = [[rng.randint(lo, hi) for _ in range(n + 1)] for n in dims]
        if any(all(c == 0 for c in v) for v in raw):
            continue
        p = normalize(raw, dims)
        pts.setdefault(p, None)
    return PointSet(tuple(dims), tuple(pts))


def grid_point_set(columns: dict[int, list[int]]) -> PointSet:
    """Points [1:i] x [1:j] for j in columns[i]."""
    raw = [((1, i), (1, j)) for i, js in columns.items() for j in js]
    return PointSet.from_coords((1, 1), raw)


def binary_matrices_up_to_row_order(t: int, s: int):
    """(0,1)-matrices with t columns, s ones, no zero row or column; rows sorted.

    Every point subset of a t x r grid with no empty ruling appears (up to a
    permutation of the rows of the grid) exactly once.
    """
    patterns = [p for n in range(1, t + 1) for p in itertools.combinations(range(t), n)]

    def gen(start, budget, acc):
        if budget == 0:
            covered = {c for p in acc for c in p}
            if len(covered) == t:
                yield [tuple(int(c in p) for c in range(t)) for p in acc]
            return
        for k in range(start, len(patterns)):
            p = patterns[k]
            if len(p) <= budget:
                yield from gen(k, budget - len(p), acc + [p])

    yield from gen(0, s, [])
