"""Borders of point sets in P^1 x P^1 from fiber-size partitions.

For X in P^1 x P^1 let alpha_X (beta_X) be the sorted sizes of the fibers
over the first (second) projection.  The eventual column vector B_C is the
prefix-sum vector of conj(alpha_X), padded to length |beta_X|, and likewise
B_R comes from conj(beta_X).  A pair of partitions is realized by some point
set exactly when a (0,1)-matrix with those margins exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

from .combinatorics import (
    BinaryMatrix,
    Partition,
    conjugate,
    delta,
    majorizes,
    matrix_margins,
    ryser_construct,
    strip_zeros,
)
from .errors import SumMismatch, WrongAmbient, ZeroMargin
from .points import PointSet, fiber_partition


def _require_p1p1(x: PointSet) -> None:
    if x.dims != (1, 1):
        raise WrongAmbient(f"expected dims (1, 1), got {x.dims}")


def alpha_beta(x: PointSet) -> tuple[Partition, Partition]:
    _require_p1p1(x)
    return fiber_partition(x, 1), fiber_partition(x, 2)


@dataclass(frozen=True)
class BorderPair:
    bc: tuple[int, ...]
    br: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bc", tuple(int(b) for b in self.bc))
        object.__setattr__(self, "br", tuple(int(b) for b in self.br))


def _padded_prefix_sums(p: Sequence[int], length: int) -> tuple[int, ...]:
    sums = list(accumulate(p))
    return tuple(sums + [sums[-1]] * (length - len(sums)))


def border_from_partitions(alpha: Sequence[int], beta: Sequence[int]) -> BorderPair:
    """Closed-form border from the fiber partitions."""
    alpha, beta = Partition(alpha), Partition(beta)
    if sum(alpha) != sum(beta):
        raise SumMismatch(f"|alpha| = {sum(alpha)} but |beta| = {sum(beta)}")
    return BorderPair(
        _padded_prefix_sums(conjugate(alpha), len(beta)),
        _padded_prefix_sums(conjugate(beta), len(alpha)),
    )


@dataclass
class Verdict:
    feasible: bool
    reasons: list[str] = field(default_factory=list)


def _as_partition(name: str, v: Sequence[int], reasons: list[str]) -> Partition | None:
    if not v:
        reasons.append(f"{name} is empty")
        return None
    d = strip_zeros(delta(v))
    if any(x < 0 for x in d):
        reasons.append(f"{name} is not weakly increasing")
        return None
    if not d or 0 in d or any(a < b for a, b in zip(d, d[1:])):
        reasons.append(f"delta({name}) = {delta(v)} is not a partition (after dropping trailing zeros)")
        return None
    return Partition(d)


def classify_border(b: BorderPair) -> Verdict:
    """Decide whether (B_C, B_R) is the border of some point set in P^1 x P^1."""
    reasons: list[str] = []
    lam = _as_partition("B_C", b.bc, reasons)
    mu = _as_partition("B_R", b.br, reasons)
    if lam is not None and mu is not None and sum(lam) != sum(mu):
        reasons.append(f"delta(B_C) sums to {sum(lam)} but delta(B_R) sums to {sum(mu)}")
    if b.bc and b.bc[0] != len(b.br):
        reasons.append(f"B_C starts with {b.bc[0]} but B_R has length {len(b.br)}")
    if b.br and b.br[0] != len(b.bc):
        reasons.append(f"B_R starts with {b.br[0]} but B_C has length {len(b.bc)}")
    if not reasons and not majorizes(lam, conjugate(mu)):
        reasons.append(f"delta(B_C) = {tuple(lam)} does not majorize conj(delta(B_R)) = {tuple(conjugate(mu))}")
    return Verdict(not reasons, reasons)


def witness_from_matrix(a: BinaryMatrix) -> PointSet:
    """Points [1:i] x [1:j] for every entry a[j-1][i-1] == 1.

    Columns index the first factor and rows the second, so the column sums
    are the fiber sizes over the first projection.
    """
    if a.rows == 0 or a.cols == 0:
        raise ZeroMargin("empty matrix")
    margins = matrix_margins(a)
    margins.alpha()
    margins.beta()
    raw = [
        ((1, i + 1), (1, j + 1))
        for i in range(a.cols)
        for j in range(a.rows)
        if a.bits[j][i]
    ]
    return PointSet.from_coords((1, 1), raw)


def witness_from_partitions(alpha: Sequence[int], beta: Sequence[int]) -> PointSet:
    return witness_from_matrix(ryser_construct(alpha, beta))


def line_counts(bc: Sequence[int]) -> list[int]:
    """Number of (1,0)-lines meeting X in exactly j points, j = 1..len(bc).

    Entry j is the negated second difference of B_C at j - 1, with H = 0 before
    the start and H constant after the end.
    """
    bc = list(bc)
    if any(a > b for a, b in zip(bc, bc[1:])):
        raise ValueError("B_C must be weakly increasing")

    def h(i: int) -> int:
        if i < 0:
            return 0
        return bc[min(i, len(bc) - 1)]

    return [(h(j - 1) - h(j - 2)) - (h(j) - h(j - 1)) for j in range(1, len(bc) + 1)]
