"""Wronskian determinants over QQ[x] and echelon forms over QQ."""

import logging
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .polys import R, Poly, Rat, x

logger = logging.getLogger(__name__)

_POLY_DOMAIN = R.to_domain()


def derivative_rows(fs: Sequence[Poly], count: int) -> list[list[Poly]]:
    """Rows f^(0), ..., f^(count-1) of the derivative matrix."""
    rows = [list(fs)]
    for _ in range(count - 1):
        rows.append([f.diff(x) for f in rows[-1]])
    return rows


def poly_det(rows: list[list[Poly]]) -> Poly:
    """Fraction-free (Bareiss) determinant of a square matrix over QQ[x]."""
    size = len(rows)
    if size == 0:
        return R.one
    return DomainMatrix(rows, (size, size), _POLY_DOMAIN).det()


def wronskian(fs: Sequence[Poly]) -> Poly:
    """det(d^(i-1) g_j / dx^(i-1)); not normalized, may be zero."""
    if not fs:
        raise ValueError("wronskian needs at least one polynomial")
    return poly_det(derivative_rows(fs, len(fs)))


def wronskian_minors(fs: Sequence[Poly]) -> list[Poly]:
    """
    Minors M_0..M_N of the (N+1) x N derivative matrix, M_j omitting row j.

    Expanding Wr(u_1..u_N, f) along its last column gives
    sum_j (-1)^(N+j) M_j f^(j), with M_N = Wr(u_1..u_N).
    """
    n = len(fs)
    rows = derivative_rows(fs, n + 1)
    return [poly_det(rows[:j] + rows[j + 1 :]) for j in range(n + 1)]


def rref_rational(rows: list[list[Rat]], width: int) -> tuple[list[list[Rat]], tuple[int, ...]]:
    """Reduced row echelon form over QQ; returns the nonzero rows and pivot columns."""
    if not rows:
        return [], ()
    matrix = DomainMatrix([list(r) for r in rows], (len(rows), width), QQ)
    reduced, pivots = matrix.rref()
    dense = reduced.to_Matrix().tolist()
    return [[QQ.from_sympy(c) for c in dense[i]] for i in range(len(pivots))], tuple(pivots)
