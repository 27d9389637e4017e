"""Points of Gr(N,d): N-dimensional spaces of polynomials of degree < d."""

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy import QQ

from ..errors import DependentBasis, OutOfRange
from ..exact_algebra import R, Poly, coeffs_of, degree, poly_from_coeffs, rref_rational

logger = logging.getLogger(__name__)


def _echelon_by_degree(polys: Sequence[Poly]) -> list[Poly]:
    """Reduced echelon basis with distinct monic leading terms, highest degree last."""
    top = max((degree(p) for p in polys), default=-1)
    if top < 0:
        return []
    width = top + 1
    # columns run from the highest degree down so pivots are leading terms
    rows = [[p.get((top - j,), QQ.zero) for j in range(width)] for p in polys]
    reduced, pivots = rref_rational(rows, width)
    basis = [poly_from_coeffs([row[top - i] for i in range(width)]) for row in reduced]
    return sorted(basis, key=degree)


def same_span(first: Sequence[Poly], second: Sequence[Poly]) -> bool:
    return _echelon_by_degree(first) == _echelon_by_degree(second)


@dataclass(frozen=True)
class PolySpace:
    d: int
    basis: tuple[Poly, ...]

    @classmethod
    def from_polys(cls, polys: Sequence[Poly], d: int) -> "PolySpace":
        """
        Canonical form of span(polys) inside C_d[x].

        Raises:
            DependentBasis: if the polynomials are linearly dependent
            OutOfRange: if a polynomial has degree >= d
        """
        polys = list(polys)
        if not polys:
            raise OutOfRange("a space needs at least one basis polynomial")
        for p in polys:
            if degree(p) >= d:
                raise OutOfRange(f"{p.as_expr()} has degree {degree(p)} >= d = {d}")
        basis = _echelon_by_degree(polys)
        if len(basis) != len(polys):
            raise DependentBasis(f"{len(polys)} polynomials span a space of dimension {len(basis)}")
        return cls(d, tuple(basis))

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence], d: int) -> "PolySpace":
        return cls.from_polys([poly_from_coeffs(row) for row in rows], d)

    @property
    def N(self) -> int:
        return len(self.basis)

    def degrees(self) -> list[int]:
        return [degree(p) for p in self.basis]

    def coefficient_rows(self) -> list[list]:
        return [coeffs_of(p) for p in self.basis]

    def scaled(self, factor: Poly, d: int | None = None) -> "PolySpace":
        """factor * X, in C_(d)[x] (default: d + deg factor)."""
        target = self.d + degree(factor) if d is None else d
        return PolySpace.from_polys([factor * p for p in self.basis], target)

    def __str__(self) -> str:
        return "span{" + ", ".join(str(p.as_expr()) for p in self.basis) + "}"


def full_space(N: int) -> PolySpace:
    """C_N[x] = span{1, x, ..., x^(N-1)}."""
    return PolySpace.from_polys([R.gens[0] ** i for i in range(N)], N)
