"""Monomial bases and forms of the multigraded coordinate ring.

Variables are grouped by factor; ``x_{i,l}`` (factor ``i``, coordinate ``l``)
has degree ``e_i``.  A monomial of multidegree ``(j_1, ..., j_k)`` is a tuple
of per-factor exponent vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Sequence

Exponents = tuple[int, ...]
Monomial = tuple[Exponents, ...]


def _check(dims: Sequence[int], degree: Sequence[int]) -> None:
    if len(dims) != len(degree):
        raise ValueError(f"degree {tuple(degree)} has wrong length for dims {tuple(dims)}")
    if any(d < 0 for d in degree):
        raise ValueError("degrees must be non-negative")


def basis_size(dims: Sequence[int], degree: Sequence[int]) -> int:
    """Dimension of the degree piece: product of C(n_i + j_i, j_i)."""
    _check(dims, degree)
    return prod(comb(n + j, j) for n, j in zip(dims, degree))


@lru_cache(maxsize=None)
def exponent_vectors(n: int, d: int) -> tuple[Exponents, ...]:
    """Exponent vectors of length n+1 summing to d, lexicographically decreasing."""
    if n == 0:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in exponent_vectors(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_basis(dims: Sequence[int], degree: Sequence[int]) -> list[Monomial]:
    """All monomials of the given multidegree, in canonical order.

    Factor 1 varies slowest; within each factor exponent vectors run in
    lexicographically decreasing order (so ``x_0^2, x_0 x_1, x_1^2``).
    """
    _check(dims, degree)
    return list(itertools.product(*(exponent_vectors(n, j) for n, j in zip(dims, degree))))


def factor_values(coords: Sequence, n: int, d: int) -> list:
    """Values of the degree-d monomials of one factor at a coordinate vector."""
    return [prod(c ** e for c, e in zip(coords, exps) if e) for exps in exponent_vectors(n, d)]


def monomial_values(dims: Sequence[int], degree: Sequence[int], coords: Sequence[Sequence]) -> list:
    """Row of all basis monomials evaluated at a point, in canonical order.

    ``coords`` is one coordinate vector per factor; works for ints or Fractions.
    """
    parts = [factor_values(c, n, d) for c, n, d in zip(coords, dims, degree)]
    return [prod(vals) for vals in itertools.product(*parts)]


def monomial_name(mono: Monomial, names: Sequence[str] | None = None) -> str:
    """Human-readable monomial, e.g. ``x0^2*y1``; the constant is ``1``."""
    if names is None:
        names = default_variable_letters(len(mono))
    factors = []
    for letter, exps in zip(names, mono):
        for l, e in enumerate(exps):
            if e == 1:
                factors.append(f"{letter}{l}")
            elif e > 1:
                factors.append(f"{letter}{l}^{e}")
    return "*".join(factors) if factors else "1"


def default_variable_letters(k: int) -> list[str]:
    if k <= 3:
        return ["x", "y", "z"][:k]
    return [f"x{i + 1}_" for i in range(k)]


@dataclass(frozen=True)
class MultiForm:
    """A multihomogeneous form: coefficients over the canonical monomial basis."""

    dims: tuple[int, ...]
    degree: tuple[int, ...]
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = basis_size(self.dims, self.degree)
        if len(self.coefficients) != n:
            raise ValueError(f"expected {n} coefficients, got {len(self.coefficients)}")

    @classmethod
    def from_terms(cls, dims, degree, terms: dict) -> "MultiForm":
        """Build a form from ``{monomial: coefficient}``."""
        basis = monomial_basis(dims, degree)
        index = {m: i for i, m in enumerate(basis)}
        coeffs = [Fraction(0)] * len(basis)
        for mono, c in terms.items():
            coeffs[index[tuple(tuple(e) for e in mono)]] += Fraction(c)
        return cls(tuple(dims), tuple(degree), tuple(coeffs))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Nonzero (monomial, coefficient) pairs in basis order."""
        basis = monomial_basis(self.dims, self.degree)
        return [(m, c) for m, c in zip(basis, self.coefficients) if c != 0]

    def evaluate(self, coords: Sequence[Sequence]) -> Fraction:
        vals = monomial_values(self.dims, self.degree, coords)
        return sum((c * v for c, v in zip(self.coefficients, vals) if c), Fraction(0))

    def __str__(self) -> str:
        names = default_variable_letters(len(self.dims))
        pieces = []
        for mono, c in self.terms():
            name = monomial_name(mono, names)
            if name == "1":
                pieces.append(str(c))
            elif c == 1:
                pieces.append(name)
            elif c == -1:
                pieces.append(f"-{name}")
            else:
                pieces.append(f"{c}*{name}")
        if not pieces:
            return "0"
        return " + ".join(pieces).replace("+ -", "- ")
