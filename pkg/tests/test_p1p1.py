import random
from itertools import accumulate

import pytest

from multihilbert.combinatorics import BinaryMatrix, Partition, conjugate, delta, gale_ryser_feasible, strip_zeros
from multihilbert.errors import Infeasible, SumMismatch, WrongAmbient, ZeroMargin
from multihilbert.hilbert import border, hilbert_table
from multihilbert.p1p1 import (
    BorderPair,
    alpha_beta,
    border_from_partitions,
    classify_border,
    line_counts,
    witness_from_matrix,
    witness_from_partitions,
)
from multihilbert.points import PointSet
from oracles import binary_matrices_up_to_row_order, partitions_of, random_point_set

RYSER_MATRIX = ((0, 1, 1, 1), (1, 1, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (1, 0, 0, 0))


def test_alpha_beta(grid13, x1, single):
    assert alpha_beta(grid13) == ((4, 3, 2, 2, 1, 1), (4, 3, 3, 3))
    assert alpha_beta(x1) == ((2, 1, 1), (2, 1, 1))
    assert alpha_beta(single) == ((1,), (1,))


def test_alpha_beta_wrong_ambient():
    x = PointSet.from_coords((2, 1), [((1, 0, 0), (1, 1))])
    with pytest.raises(WrongAmbient):
        alpha_beta(x)


def test_border_from_partitions():
    b = border_from_partitions((4, 3, 2, 2, 1, 1), (4, 3, 3, 3))
    assert b == BorderPair((6, 10, 12, 13), (4, 8, 12, 13, 13, 13))
    assert border_from_partitions((2, 1, 1), (2, 1, 1)) == BorderPair((3, 4, 4), (3, 4, 4))
    assert border_from_partitions((1,), (1,)) == BorderPair((1,), (1,))
    with pytest.raises(SumMismatch):
        border_from_partitions((2,), (1,))


def test_classify_examples():
    assert classify_border(BorderPair((6, 10, 12, 13), (4, 8, 12, 13, 13, 13))).feasible
    assert classify_border(BorderPair((3, 4, 4), (3, 4, 4))).feasible
    v = classify_border(BorderPair((2, 2), (2, 4)))
    assert not v.feasible
    assert any("sums to" in r for r in v.reasons)


@pytest.mark.parametrize(
    "bc, br, fragment",
    [
        ((), (1,), "empty"),
        ((3, 2), (2, 3, 3), "weakly increasing"),
        ((1, 3), (2, 4), "not a partition"),
        ((4, 4), (2, 4), "length"),
        ((2,), (2, 2), "length"),
        ((2,), (1, 1), "sums to"),
        # margins (3,3,1) on both sides fail Gale-Ryser
        ((3, 5, 7), (3, 5, 7), "majorize"),
    ],
)
def test_classify_reasons(bc, br, fragment):
    v = classify_border(BorderPair(bc, br))
    assert not v.feasible
    assert any(fragment in r for r in v.reasons), v.reasons


def test_witness_from_matrix():
    x = witness_from_matrix(BinaryMatrix.from_rows(RYSER_MATRIX))
    assert x.s == 9
    assert alpha_beta(x) == ((3, 3, 2, 1), (3, 3, 1, 1, 1))
    one = witness_from_matrix(BinaryMatrix.from_rows([[1]]))
    assert str(one.points[0]) == "[1:1] x [1:1]"
    eye = witness_from_matrix(BinaryMatrix.from_rows([[1, 0], [0, 1]]))
    assert eye.t() == (2, 2) and alpha_beta(eye) == ((1, 1), (1, 1))
    with pytest.raises(ZeroMargin):
        witness_from_matrix(BinaryMatrix.from_rows([[1, 0], [1, 0]]))


def test_witness_from_partitions():
    x = witness_from_partitions((3, 3, 2, 1), (3, 3, 1, 1, 1))
    assert alpha_beta(x) == ((3, 3, 2, 1), (3, 3, 1, 1, 1))
    assert witness_from_partitions((1,), (1,)).s == 1
    grid = witness_from_partitions((2, 2), (2, 2))
    assert grid.s == 4 and grid.t() == (2, 2)
    with pytest.raises(Infeasible):
        witness_from_partitions((2, 2), (4,))


def test_line_counts():
    assert line_counts((6, 10, 12, 13)) == [2, 2, 1, 1]
    assert line_counts((3, 4, 4)) == [2, 1, 0]
    assert line_counts((1,)) == [1]
    with pytest.raises(ValueError):
        line_counts((3, 2))


def test_same_border_different_hilbert(x1, x2):
    t1, t2 = hilbert_table(x1), hilbert_table(x2)
    b1, b2 = border(t1), border(t2)
    assert (b1.bc, b1.br) == (b2.bc, b2.br) == ([3, 4, 4], [3, 4, 4])
    diff = [j for j in t1.values if t1.values[j] != t2.values[j]]
    assert diff == [(1, 1)]


def test_direct_border_matches_closed_form_random():
    rng = random.Random(41)
    for _ in range(120):
        x = random_point_set(rng, (1, 1), rng.randint(1, 12), hi=4)
        alpha, beta = alpha_beta(x)
        b = border(hilbert_table(x))
        closed = border_from_partitions(alpha, beta)
        assert (tuple(b.bc), tuple(b.br)) == (closed.bc, closed.br)
        assert strip_zeros(delta(b.bc)) == conjugate(alpha)
        assert strip_zeros(delta(b.br)) == conjugate(beta)
        counts = line_counts(b.bc)
        assert sum(counts) == len(alpha)
        assert sum(j * c for j, c in enumerate(counts, start=1)) == x.s
        assert counts == [list(alpha).count(j) for j in range(1, len(b.bc) + 1)]


@pytest.mark.parametrize("s", range(1, 11))
def test_classify_sound(s):
    for a in partitions_of(s):
        for b in partitions_of(s):
            if gale_ryser_feasible(a, b):
                assert classify_border(border_from_partitions(a, b)).feasible


def _achievable_borders(max_s):
    """Borders of every point subset of a grid with at most max_s points, by direct rank."""
    seen_margins = {}
    for s in range(1, max_s + 1):
        for t in range(1, s + 1):
            for rows in binary_matrices_up_to_row_order(t, s):
                m = BinaryMatrix.from_rows(rows)
                key = (Partition.sorted(m.column_sums()), Partition.sorted(m.row_sums()))
                if key not in seen_margins:
                    seen_margins[key] = m
    borders = set()
    for m in seen_margins.values():
        b = border(hilbert_table(witness_from_matrix(m)))
        borders.add((tuple(b.bc), tuple(b.br)))
    return borders


def _candidates(max_s):
    """Border-shaped vectors: prefix sums of a partition padded by repeats, any length."""
    out = set()
    for s in range(1, max_s + 1):
        for lam in partitions_of(s):
            sums = list(accumulate(lam))
            for length in range(len(lam), s + 1):
                out.add(tuple(sums + [s] * (length - len(sums))))
    return sorted(out)


def test_classify_complete_against_grid_search():
    achievable = _achievable_borders(7)
    cands = _candidates(7)
    n_feasible = 0
    for bc in cands:
        for br in cands:
            verdict = classify_border(BorderPair(bc, br)).feasible
            assert verdict == ((bc, br) in achievable), (bc, br)
            n_feasible += verdict
    assert n_feasible == len(achievable)


def test_classify_rejects_malformed_small():
    # every weakly increasing pair with entries <= 4 that is not border-shaped is rejected
    import itertools

    shaped = set(_candidates(4))
    vecs = [v for n in range(1, 5) for v in itertools.combinations_with_replacement(range(0, 5), n)]
    for bc in vecs:
        if bc in shaped:
            continue
        for br in vecs[:60]:
            assert not classify_border(BorderPair(bc, br)).feasible
