"""Maps between spaces: squaring, multiplication by root factors, affine changes of variable."""

import logging
from fractions import Fraction
from typing import Sequence

from ..errors import OutOfRange, RankMismatch
from ..exact_algebra import Poly, affine, linear_factor, poly_nth_root, product
from .exponents import Point, wronskian_of_space
from .space import PolySpace

logger = logging.getLogger(__name__)


def squaring_map(X: PolySpace) -> PolySpace:
    """span{p^2, pq, q^2} in Gr(3, 2d-1) for X = span{p, q} in Gr(2, d)."""
    if X.N != 2:
        raise RankMismatch(f"squaring needs a 2-dimensional space, got N={X.N}")
    p, q = X.basis
    return PolySpace.from_polys([p * p, p * q, q * q], 2 * X.d - 1)


def shift_by_roots(X: PolySpace, points: Sequence[Point], ks: Sequence[int]) -> PolySpace:
    """prod (x - z_s)^(k_s) * X in Gr(N, d + |k|)."""
    if len(points) != len(ks):
        raise OutOfRange("each point needs one multiplicity")
    if any(k < 0 for k in ks):
        raise OutOfRange(f"multiplicities must be nonnegative: {list(ks)}")
    factor = product(linear_factor(Fraction(z)) ** k for z, k in zip(points, ks))
    return X.scaled(factor, X.d + sum(ks))


def affine_substitute(X: PolySpace, a: Fraction | int, b: Fraction | int) -> PolySpace:
    """{f(ax + b) : f in X}."""
    if a == 0:
        raise OutOfRange("affine substitution needs a != 0")
    return PolySpace.from_polys([affine(p, a, b) for p in X.basis], X.d)


def reduced_wronskian(X: PolySpace) -> Poly:
    """
    Monic N-th root (N odd) or r-th root (N = 2r) of Wr(X).

    Raises:
        NotAPower: if Wr(X) is not such a power
    """
    N = X.N
    order = N if N % 2 else N // 2
    return poly_nth_root(wronskian_of_space(X), order)
