"""Points and finite point sets in P^{n_1} x ... x P^{n_k}.

Factor indices in this module are 1-based, matching the usual numbering of
the factors of a multiprojective space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .combinatorics import Partition
from .errors import (
    ArityError,
    DuplicatePoint,
    EmptySet,
    NotAProduct,
    PointSyntaxError,
    ZeroFactor,
)
from .monomials import MultiForm

Dims = tuple[int, ...]


def check_dims(dims: Iterable[int]) -> Dims:
    dims = tuple(int(n) for n in dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    if any(n < 1 for n in dims):
        raise ValueError(f"every factor needs n_i >= 1, got {dims}")
    return dims


def _canonical_factor(vec: Sequence) -> tuple[Fraction, ...]:
    vec = [Fraction(x) for x in vec]
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        raise ZeroFactor("factor vector is all zeros")
    return tuple(x / lead for x in vec)


@dataclass(frozen=True)
class MultiPoint:
    """A point stored in canonical form: in each factor the first nonzero coordinate is 1."""

    coords: tuple[tuple[Fraction, ...], ...]

    @property
    def dims(self) -> Dims:
        return tuple(len(c) - 1 for c in self.coords)

    @property
    def k(self) -> int:
        return len(self.coords)

    def factor(self, i: int) -> "MultiPoint":
        """The i-th coordinate as a point of P^{n_i}."""
        return MultiPoint((self.coords[i - 1],))

    def drop(self, i: int) -> "MultiPoint":
        """The point with factor i removed."""
        return MultiPoint(self.coords[:i - 1] + self.coords[i:])

    def integer_coords(self) -> tuple[tuple[int, ...], ...]:
        """Primitive integer representative of each factor (same projective point)."""
        out = []
        for vec in self.coords:
            den = 1
            for x in vec:
                den = lcm(den, x.denominator)
            ints = [int(x * den) for x in vec]
            g = 0
            for x in ints:
                g = gcd(g, x)
            out.append(tuple(x // g for x in ints))
        return tuple(out)

    def __str__(self) -> str:
        return " x ".join("[" + ":".join(str(x) for x in vec) + "]" for vec in self.coords)


def normalize(raw: Sequence[Sequence], dims: Sequence[int]) -> MultiPoint:
    """Canonical representative of a point given by raw homogeneous coordinates."""
    dims = check_dims(dims)
    if len(raw) != len(dims):
        raise ArityError(f"expected {len(dims)} factors, got {len(raw)}")
    for i, (vec, n) in enumerate(zip(raw, dims), start=1):
        if len(vec) != n + 1:
            raise ArityError(f"factor {i} needs {n + 1} coordinates, got {len(vec)}")
    return MultiPoint(tuple(_canonical_factor(vec) for vec in raw))


@dataclass(frozen=True)
class PointSet:
    """Nonempty ordered set of distinct points; insertion order is preserved."""

    dims: Dims
    points: tuple[MultiPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", check_dims(self.dims))
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise EmptySet("a point set needs at least one point")
        seen = set()
        for p in self.points:
            if p.dims != self.dims:
                raise ArityError(f"point {p} does not lie in dims {self.dims}")
            if p in seen:
                raise DuplicatePoint(f"duplicate point {p}")
            seen.add(p)

    @classmethod
    def from_coords(cls, dims: Sequence[int], raw_points: Iterable[Sequence[Sequence]]) -> "PointSet":
        dims = check_dims(dims)
        return cls(dims, tuple(normalize(r, dims) for r in raw_points))

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def k(self) -> int:
        return len(self.dims)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> MultiPoint:
        return self.points[i]

    def t(self) -> tuple[int, ...]:
        """Sizes of the projections onto each factor."""
        return tuple(len(_distinct(p.coords[i] for p in self.points)) for i in range(self.k))


def _distinct(items: Iterable) -> list:
    return list(dict.fromkeys(items))


_NUM = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def _parse_rational(token: str, line: int) -> Fraction:
    token = token.strip()
    if not _NUM.match(token):
        raise PointSyntaxError(f"bad coordinate {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise PointSyntaxError(f"zero denominator in {token!r}", line) from None


def parse_point_set(text: str) -> PointSet:
    """Parse the line-based point-set format.

    ``#`` lines and blank lines are ignored.  The first significant line is
    ``dims: n1 ... nk``; every later line is one point, factors separated by
    ``|`` and coordinates by ``,``.  Coordinates are integers or ``p/q``.
    """
    dims: Dims | None = None
    points: list[MultiPoint] = []
    seen: dict[MultiPoint, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dims is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip().lower() != "dims":
                raise PointSyntaxError("expected 'dims: n1 ... nk'", lineno)
            try:
                dims = check_dims(int(tok) for tok in rest.split())
            except ValueError as exc:
                raise PointSyntaxError(f"bad dims line: {exc}", lineno) from None
            continue
        factors = line.split("|")
        if len(factors) != len(dims):
            raise ArityError(f"expected {len(dims)} factors, got {len(factors)}", lineno)
        raw_point = []
        for i, (chunk, n) in enumerate(zip(factors, dims), start=1):
            tokens = chunk.split(",")
            if len(tokens) != n + 1:
                raise ArityError(f"factor {i} needs {n + 1} coordinates, got {len(tokens)}", lineno)
            raw_point.append([_parse_rational(tok, lineno) for tok in tokens])
        try:
            p = normalize(raw_point, dims)
        except ZeroFactor:
            raise ZeroFactor("factor vector is all zeros", lineno) from None
        if p in seen:
            raise DuplicatePoint(f"same point as line {seen[p]}", lineno)
        seen[p] = lineno
        points.append(p)
    if dims is None:
        raise PointSyntaxError("missing 'dims:' line")
    if not points:
        raise EmptySet("no points given")
    return PointSet(dims, tuple(points))


def format_point_set(x: PointSet, comment: str | None = None) -> str:
    """Inverse of :func:`parse_point_set` (canonical coordinates)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("dims: " + " ".join(str(n) for n in x.dims))
    for p in x.points:
        lines.append("|".join(",".join(str(c) for c in vec) for vec in p.coords))
    return "\n".join(lines) + "\n"


def _check_factor(x: PointSet, i: int) -> None:
    if not 1 <= i <= x.k:
        raise IndexError(f"factor index {i} out of range 1..{x.k}")


def projection(x: PointSet, i: int) -> PointSet:
    """The distinct i-th coordinates of X, as a point set in P^{n_i}."""
    _check_factor(x, i)
    return PointSet((x.dims[i - 1],), tuple(_distinct(p.factor(i) for p in x.points)))


def fibers(x: PointSet, i: int) -> list[tuple[MultiPoint, PointSet]]:
    """Group X by its i-th coordinate.

    Returns ``(coordinate, residual)`` pairs in order of first appearance, where
    the residual holds the remaining factors of the points over that coordinate.
    """
    if x.k < 2:
        raise NotAProduct("fibers need at least two factors")
    _check_factor(x, i)
    groups: dict[MultiPoint, list[MultiPoint]] = {}
    for p in x.points:
        groups.setdefault(p.factor(i), []).append(p.drop(i))
    rest = x.dims[:i - 1] + x.dims[i:]
    return [(c, PointSet(rest, tuple(qs))) for c, qs in groups.items()]


def fiber_partition(x: PointSet, i: int) -> Partition:
    """Fiber sizes over the i-th projection, sorted weakly decreasing."""
    return Partition(sorted((len(q) for _, q in fibers(x, i)), reverse=True))


def point_ideal_generators(p: MultiPoint) -> list[MultiForm]:
    """Linear forms generating the ideal of a single point.

    In factor i with pivot j0 (the first nonzero coordinate, equal to 1) the
    forms are ``x_{i,j} - a_{i,j} x_{i,j0}`` for j != j0.
    """
    dims = p.dims
    gens = []
    for i, vec in enumerate(p.coords):
        degree = tuple(int(h == i) for h in range(len(dims)))
        j0 = next(j for j, a in enumerate(vec) if a != 0)
        for j, a in enumerate(vec):
            if j == j0:
                continue
            terms = {_unit_monomial(dims, i, j): 1}
            if a != 0:
                terms[_unit_monomial(dims, i, j0)] = -a
            gens.append(MultiForm.from_terms(dims, degree, terms))
    return gens


def _unit_monomial(dims: Dims, i: int, j: int):
    return tuple(
        tuple(int(h == i and l == j) for l in range(n + 1)) for h, n in enumerate(dims)
    )
