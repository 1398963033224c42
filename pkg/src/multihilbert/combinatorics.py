"""Partitions, majorization and (0,1)-matrices with prescribed margins."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterable, Sequence

from .errors import Infeasible, PartitionError, ZeroMargin


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise PartitionError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,3,2,1"``; raises ValueError on malformed input."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t.isdigit() for t in tokens):
        raise PartitionError(f"not a comma-separated list of naturals: {text!r}")
    return Partition([int(t) for t in tokens])


def conjugate(p: Sequence[int]) -> Partition:
    """The conjugate partition: entry i counts parts >= i."""
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Prefix-sum dominance after zero-padding to a common length.

    Equal sums are not required here.
    """
    pa = accumulate(x for x, _ in zip_longest(a, b, fillvalue=0))
    pb = accumulate(y for _, y in zip_longest(a, b, fillvalue=0))
    return all(x >= y for x, y in zip(pa, pb))


def delta(v: Sequence[int]) -> tuple[int, ...]:
    """First differences with an implicit leading zero."""
    if not v:
        raise ValueError("delta of an empty sequence")
    return tuple(b - a for a, b in zip((0,) + tuple(v[:-1]), v))


def strip_zeros(v: Sequence[int]) -> tuple[int, ...]:
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return tuple(v)


def gale_ryser_feasible(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Is there a (0,1)-matrix with column sums alpha and row sums beta?"""
    alpha, beta = Partition(alpha), Partition(beta)
    return sum(alpha) == sum(beta) and majorizes(conjugate(alpha), beta)


@dataclass(frozen=True)
class BinaryMatrix:
    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.rows or any(len(r) != self.cols for r in self.bits):
            raise ValueError("bits do not match the declared shape")
        if any(b not in (0, 1) for r in self.bits for b in r):
            raise ValueError("entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        bits = tuple(tuple(int(b) for b in r) for r in rows)
        return cls(len(bits), len(bits[0]) if bits else 0, bits)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(r[c] for r in self.bits) for c in range(self.cols))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.bits)

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix.from_rows(list(zip(*self.bits))) if self.rows else self

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in r) for r in self.bits)


def parse_binary_matrix(text: str) -> BinaryMatrix:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if any(set(r) - {"0", "1"} for r in rows):
        raise ValueError("matrix rows must consist of 0/1 characters")
    return BinaryMatrix.from_rows([[int(c) for c in r] for r in rows])


@dataclass(frozen=True)
class Margins:
    column_sums: tuple[int, ...]
    row_sums: tuple[int, ...]

    def alpha(self) -> Partition:
        if 0 in self.column_sums:
            raise ZeroMargin("matrix has an all-zero column")
        return Partition.sorted(self.column_sums)

    def beta(self) -> Partition:
        if 0 in self.row_sums:
            raise ZeroMargin("matrix has an all-zero row")
        return Partition.sorted(self.row_sums)


def matrix_margins(a: BinaryMatrix) -> Margins:
    return Margins(a.column_sums(), a.row_sums())


def ryser_construct(alpha: Sequence[int], beta: Sequence[int]) -> BinaryMatrix:
    """Ryser's column-filling construction of a matrix in M(alpha, beta).

    Columns are filled right to left; each takes its 1s from the rows with the
    most 1s still to place, ties going to the earlier row.  The result has
    ``len(beta)`` rows and ``len(alpha)`` columns.
    """
    alpha, beta = Partition.sorted(alpha), Partition.sorted(beta)
    if not gale_ryser_feasible(alpha, beta):
        raise Infeasible("infeasible: alpha* does not majorize beta")
    remaining = list(beta)
    bits = [[0] * len(alpha) for _ in beta]
    for c in range(len(alpha) - 1, -1, -1):
        order = sorted(range(len(beta)), key=lambda r: (-remaining[r], r))
        for r in order[:alpha[c]]:
            if remaining[r] == 0:
                raise Infeasible("infeasible: alpha* does not majorize beta")
            bits[r][c] = 1
            remaining[r] -= 1
    return BinaryMatrix.from_rows(bits)
