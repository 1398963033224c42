"""Hilbert functions of finite point sets by rank of evaluation matrices.

``H_X(j)`` is the rank of the matrix whose rows are the degree-``j`` basis
monomials evaluated at the points of X.  Only the box
``[0, t_1 - 1] x ... x [0, t_k - 1]`` is computed; every other degree is
answered by clamping each coordinate to ``t_i - 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Sequence

from .exactlinalg import (
    RationalMatrix,
    bareiss_rank,
    independent_row_subset,
    first_null_vector_not_orthogonal,
)
from .errors import NotSingleFactor
from .monomials import MultiForm, basis_size, monomial_values
from .points import Dims, PointSet, fibers, projection

MultiDegree = tuple[int, ...]


def _degree(x: PointSet, j: Sequence[int]) -> MultiDegree:
    j = tuple(int(v) for v in j)
    if len(j) != x.k:
        raise ValueError(f"degree {j} needs {x.k} entries")
    if any(v < 0 for v in j):
        raise ValueError(f"degree {j} has a negative entry")
    return j


def evaluation_matrix(x: PointSet, j: Sequence[int]) -> RationalMatrix:
    """s x N matrix of basis monomials evaluated at the canonical points."""
    j = _degree(x, j)
    rows = [monomial_values(x.dims, j, p.coords) for p in x.points]
    return RationalMatrix.from_rows(rows, basis_size(x.dims, j))


def hilbert_value(x: PointSet, j: Sequence[int]) -> int:
    """H_X(j), the rank of the evaluation matrix in degree j."""
    j = _degree(x, j)
    # Rows are evaluated at primitive integer representatives: each row is a
    # nonzero multiple of the canonical one, so the rank is unchanged.
    rows = [monomial_values(x.dims, j, p.integer_coords()) for p in x.points]
    return bareiss_rank(rows)


def _box(t: Sequence[int]):
    return itertools.product(*(range(ti) for ti in t))


@dataclass(frozen=True)
class HilbertTable:
    """Hilbert values on the box [0, t_1-1] x ... x [0, t_k-1]."""

    dims: Dims
    s: int
    t: tuple[int, ...]
    values: dict[MultiDegree, int] = field(repr=False, compare=True)

    @property
    def k(self) -> int:
        return len(self.t)

    @property
    def corner(self) -> MultiDegree:
        return tuple(ti - 1 for ti in self.t)

    def clamp(self, j: Sequence[int]) -> MultiDegree:
        if len(j) != self.k:
            raise ValueError(f"degree {tuple(j)} needs {self.k} entries")
        if any(v < 0 for v in j):
            raise ValueError(f"degree {tuple(j)} has a negative entry")
        return tuple(min(v, ti - 1) for v, ti in zip(j, self.t))

    def __getitem__(self, j: Sequence[int]) -> int:
        return self.values[self.clamp(j)]

    def nested(self) -> Any:
        """Box values as nested lists, first degree outermost."""
        return _nest(self.values, self.t, ())


def _nest(values, t, prefix):
    if len(prefix) == len(t):
        return values[prefix]
    return [_nest(values, t, prefix + (v,)) for v in range(t[len(prefix)])]


def hilbert_table(x: PointSet, executor=None) -> HilbertTable:
    """Compute H_X on the whole box.

    Box entries are independent; pass a :class:`concurrent.futures.Executor`
    to evaluate them concurrently.  The result does not depend on it.
    """
    t = x.t()
    degrees = list(_box(t))
    fn = partial(hilbert_value, x)
    if executor is None:
        vals = map(fn, degrees)
    else:
        vals = executor.map(fn, degrees)
    return HilbertTable(x.dims, x.s, t, dict(zip(degrees, vals)))


def hilbert_query(table: HilbertTable, j: Sequence[int]) -> int:
    """H_X(j) for any degree, by clamping into the box."""
    return table[j]


@dataclass(frozen=True)
class Border:
    """Border arrays: array i is the box slice with coordinate i fixed at t_i - 1."""

    t: tuple[int, ...]
    arrays: tuple[Any, ...]

    @property
    def bc(self) -> list[int]:
        """Eventual column vector (k = 2): H(t_1 - 1, j)."""
        self._need_two()
        return self.arrays[0]

    @property
    def br(self) -> list[int]:
        """Eventual row vector (k = 2): H(j, t_2 - 1)."""
        self._need_two()
        return self.arrays[1]

    def _need_two(self) -> None:
        if len(self.t) != 2:
            raise ValueError("B_C / B_R are only defined for two factors")


def border(table: HilbertTable) -> Border:
    arrays = []
    for i in range(table.k):
        rest = table.t[:i] + table.t[i + 1:]
        vals = {}
        for r in _box(rest):
            vals[r] = table.values[r[:i] + (table.t[i] - 1,) + r[i:]]
        arrays.append(_nest(vals, rest, ()))
    return Border(table.t, tuple(arrays))


def separators(x: PointSet, j: Sequence[int]) -> tuple[list[int], list[MultiForm]]:
    """Separating forms of degree j.

    Picks h = H_X(j) points greedily (first independent rows of the evaluation
    matrix) and, for each of them, a form of degree j vanishing at the other
    h - 1 chosen points but not at it.  The form is the first nullspace basis
    vector of the other rows that does not vanish at the point.
    """
    j = _degree(x, j)
    m = evaluation_matrix(x, j)
    subset = independent_row_subset(m)
    forms = []
    for i in subset:
        others = m.submatrix([r for r in subset if r != i])
        v = first_null_vector_not_orthogonal(others, m.row(i))
        if v is None:  # pragma: no cover - excluded by the independence of the rows
            raise ArithmeticError(f"no separator for point {i}")
        forms.append(MultiForm(x.dims, j, v))
    return subset, forms


def separators_pn(x: PointSet) -> list[MultiForm]:
    """s forms of degree s - 1 separating the points of X in P^n."""
    if x.k != 1:
        raise NotSingleFactor("separators_pn needs a single projective factor")
    subset, forms = separators(x, (x.s - 1,))
    assert subset == list(range(x.s))
    return forms


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PropertyReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        return "\n".join(
            f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        )


def _extended(t):
    # one step past the box in every direction
    return itertools.product(*(range(ti + 1) for ti in t))


def verify_properties(x: PointSet, table: HilbertTable) -> PropertyReport:
    """Check necessary conditions on a computed table.

    Monotonicity and stabilization along every coordinate (over the box and
    one step beyond, via clamping), axis restrictions against the projections
    computed as single-factor point sets, and H = s on and past the corner.
    """
    k = table.k
    units = [tuple(int(h == c) for h in range(k)) for c in range(k)]

    def add(a, b):
        return tuple(p + q for p, q in zip(a, b))

    mono_bad = []
    stab_bad = []
    for j in _extended(table.t):
        for e in units:
            a, b, c = table[j], table[add(j, e)], table[add(add(j, e), e)]
            if a > b:
                mono_bad.append((j, e))
            if a == b and b != c:
                stab_bad.append((j, e))
    checks = [
        CheckResult("monotonicity", not mono_bad, _first(mono_bad)),
        CheckResult("stabilization", not stab_bad, _first(stab_bad)),
    ]

    axis_bad = []
    for i in range(k):
        proj = projection(x, i + 1)
        for l in range(table.t[i] + 1):
            deg = tuple(l if h == i else 0 for h in range(k))
            expected = hilbert_value(proj, (l,))
            if table[deg] != expected:
                axis_bad.append(f"H({deg})={table[deg]} but projection {i + 1} gives {expected}")
            if x.dims[i] == 1 and expected != min(l + 1, table.t[i]):
                axis_bad.append(f"projection {i + 1} at {l}: {expected} != min(l+1, t_i)")
    checks.append(CheckResult("axis_restriction", not axis_bad, _first(axis_bad)))

    corner = table.corner
    beyond = tuple(c + 1 for c in corner)
    corner_vals = (table.values.get(corner), table[beyond])
    corner_ok = all(v == x.s for v in corner_vals) and table.s == x.s
    checks.append(CheckResult("corner_equals_s", corner_ok,
                              "" if corner_ok else f"values {corner_vals}, s={x.s}"))
    return PropertyReport(checks)


def fiber_sum(x: PointSet, rest_degree: Sequence[int], i: int = 1) -> int:
    """Sum over the fibers of the i-th projection of H_{Q_P}(rest_degree)."""
    return sum(hilbert_value(q, rest_degree) for _, q in fibers(x, i))


def _first(items) -> str:
    if not items:
        return ""
    return f"{len(items)} failure(s), first: {items[0]}"
