"""
Differential operators attached to polynomial spaces: the fundamental operator
D_X, its factorization through divided Wronskians, the dual-operator identity
and scalar Miura operators.
"""

import logging
from typing import Sequence

from ..errors import OutOfRange, RankMismatch
from ..exact_algebra import (
    DiffOp,
    K,
    R,
    Poly,
    RatFunc,
    diffop_compose,
    diffop_conjugate_by_logderiv,
    diffop_formal_conjugate,
    diffop_from_kernel,
    first_order,
    identity,
    log_derivative,
    product,
    ratfunc,
)
from .duality import TPolynomials, associated_T, divided_wronskian, dual_space_full, verified_stratum_data
from .exponents import EvaluatedStratumData
from .space import PolySpace

logger = logging.getLogger(__name__)


def y_from_basis(basis: Sequence[Poly], T: TPolynomials) -> list[Poly]:
    """[y_1, ..., y_(N-1)] with y_(N-i) = Wr-dagger(u_1, ..., u_i)."""
    N = len(basis)
    y = [R.one] * (N - 1)
    for i in range(1, N):
        y[N - i - 1] = divided_wronskian(basis[:i], T)
    return y


def build_DX_factorized(y: Sequence[Poly], T: TPolynomials) -> DiffOp:
    """
    Product of the factors d - ln'(y_(k-1) T_k ... T_N / y_k), k = 1..N, taken
    left to right, with y_0 = y_N = 1.
    """
    N = T.N
    if len(y) != N - 1:
        raise OutOfRange(f"expected {N - 1} polynomials y_i, got {len(y)}")
    ys = [R.one, *y, R.one]
    factors = []
    for k in range(1, N + 1):
        tail = product(T[j] for j in range(k, N + 1))
        psi = log_derivative(ys[k - 1] * tail) - log_derivative(ys[k])
        factors.append(first_order(-psi))
    return diffop_compose(factors)


def fundamental_operator(X: PolySpace) -> DiffOp:
    """D_X: the monic operator with kernel X."""
    return diffop_from_kernel(list(X.basis))


def dual_operator_identity_check(X: PolySpace, data: EvaluatedStratumData | None = None) -> bool:
    """D_(X-dagger) == (T_1...T_N) (D_X)^* (T_1...T_N)^(-1)."""
    dual = dual_space_full(X, data)
    left = fundamental_operator(dual.space)
    psi = log_derivative(dual.T.product())
    right = diffop_conjugate_by_logderiv(diffop_formal_conjugate(fundamental_operator(X)), psi)
    holds = left == right
    logger.info("dual operator identity for %s: %s", X, holds)
    return holds


def miura_scalar_operator(lie_type: str, r: int, v: Sequence[RatFunc]) -> DiffOp:
    """
    Type C: (d + v_1)...(d + v_r)(d - v_r)...(d - v_1).
    Type B: the same with a middle d.
    """
    if len(v) != r:
        raise OutOfRange(f"expected {r} functions v_i, got {len(v)}")
    letter = lie_type.upper()
    if letter not in ("B", "C"):
        raise OutOfRange(f"Miura operators are defined for types B and C, got {lie_type}")
    values = [K(f) for f in v]
    left = [first_order(f) for f in values]
    right = [first_order(-f) for f in reversed(values)]
    middle = [identity(1)] if letter == "B" else []
    return diffop_compose(left + middle + right)


def half_conjugate(L: DiffOp, T: TPolynomials) -> DiffOp:
    """f^(-1) L f for f = (T_1...T_N)^(-1/2), through psi = (1/2) ln'(T_1...T_N)."""
    psi = log_derivative(T.product()) * ratfunc(R.one, R(2))
    return diffop_conjugate_by_logderiv(L, psi)


def miura_potential(X: PolySpace, data: EvaluatedStratumData | None = None) -> tuple[RatFunc, TPolynomials]:
    """
    v = ln'(u_1) - (1/2) ln'(T_1) for X = span{u_1, u_2} without base points,
    so that half_conjugate((d + v)(d - v), T) == D_X.

    Raises:
        RankMismatch: if X is not 2-dimensional
        OutOfRange: if X has base points
    """
    if X.N != 2:
        raise RankMismatch(f"the rank-one Miura potential needs N=2, got N={X.N}")
    T = associated_T(verified_stratum_data(X, data), 2)
    if T[2] != R.one:
        raise OutOfRange(f"{X} has base points: T_2 = {T[2].as_expr()}")
    v = log_derivative(X.basis[0]) - log_derivative(T[1]) * ratfunc(R.one, R(2))
    logger.debug("Miura potential of %s: %s", X, v)
    return v, T
