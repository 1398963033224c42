"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Rank is computed by fraction-free
(Bareiss) elimination on rows cleared to integers; nullspaces come from a
reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "RationalMatrix":
        data = [tuple(Fraction(x) for x in r) for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, row_indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(
            len(row_indices), self.cols, tuple(x for i in row_indices for x in self.row(i))
        )

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product ``m @ v``."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
                     for i in range(self.rows))


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in v]
    return v


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by single-step fraction-free elimination.

    The input list is consumed (rows are overwritten).
    """
    a = rows
    nrows = len(a)
    if nrows == 0:
        return 0
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f == 0:
                # entries below remain exact minors after scaling by p / prev
                if p != prev:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = row[j] * p // prev
                continue
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals (fraction-free elimination on integer rows)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return bareiss_rank([integer_row(m.row(i)) for i in range(m.rows)])


def rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _null_vector(reduced, pivots, f: int, cols: int) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * cols
    v[f] = Fraction(1)
    for row, pc in zip(reduced, pivots):
        v[pc] = -row[f]
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


def nullspace(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace, one vector per free column in order.

    Each vector is scaled so that its first nonzero entry is 1.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    return [_null_vector(reduced, pivots, f, m.cols) for f in range(m.cols) if f not in pivot_set]


def first_null_vector_not_orthogonal(m: RationalMatrix, target: Sequence) -> tuple[Fraction, ...] | None:
    """First vector v of ``nullspace(m)`` with target . v != 0, or None.

    Only the chosen vector is built: target . v_f equals entry f of target
    reduced against the rref rows.
    """
    if len(target) != m.cols:
        raise ValueError("target length does not match column count")
    reduced, pivots = rref(m)
    w = [Fraction(x) for x in target]
    for row, pc in zip(reduced, pivots):
        c = w[pc]
        if c:
            w = [a - c * b if b else a for a, b in zip(w, row)]
    pivot_set = set(pivots)
    f = next((f for f in range(m.cols) if f not in pivot_set and w[f] != 0), None)
    return None if f is None else _null_vector(reduced, pivots, f, m.cols)


def independent_row_subset(m: RationalMatrix) -> list[int]:
    """Indices of a maximal independent set of rows, chosen greedily.

    A row is kept when it is not in the span of the rows already kept.
    """
    basis: list[tuple[int, list[int]]] = []  # (pivot column, primitive integer row)
    chosen = []
    for i in range(m.rows):
        v = integer_row(m.row(i))
        for pc, b in basis:
            if v[pc]:
                bp, vp = b[pc], v[pc]
                v = [x * bp - vp * y for x, y in zip(v, b)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            continue
        v = _primitive(v)
        # keep earlier basis rows reduced at the new pivot
        for k, (qc, b) in enumerate(basis):
            if b[pc]:
                bp, vp = b[pc], v[pc]
                basis[k] = (qc, _primitive([x * vp - bp * y for x, y in zip(b, v)]))
        basis.append((pc, v))
        chosen.append(i)
    return chosen
