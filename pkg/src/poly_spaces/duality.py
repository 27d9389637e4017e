"""Divided Wronskians and dual spaces."""

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

from ..errors import MembershipFailed
from ..exact_algebra import R, Poly, exact_quotient, format_poly, linear_factor, product, wronskian
from ..weights import dual_tilde
from .exponents import EvaluatedStratumData, auto_stratum_data, stratum_membership
from .space import PolySpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TPolynomials:
    """T_1, ..., T_N attached to stratum data."""

    factors: tuple[Poly, ...]

    @property
    def N(self) -> int:
        return len(self.factors)

    def __getitem__(self, i: int) -> Poly:
        """1-based."""
        return self.factors[i - 1]

    def product(self) -> Poly:
        return product(self.factors)

    def __str__(self) -> str:
        return "(" + ", ".join(format_poly(t) for t in self.factors) + ")"


def associated_T(data: EvaluatedStratumData, N: int) -> TPolynomials:
    """T_i = prod over finite z of (x - z)^(lambda_i - lambda_(i+1)); infinity contributes 1."""
    factors = []
    for i in range(1, N + 1):
        factors.append(product(linear_factor(z) ** (lam[i] - lam[i + 1]) for z, lam in data.finite()))
    return TPolynomials(tuple(factors))


def divided_wronskian(gs: Sequence[Poly], T: TPolynomials) -> Poly:
    """
    Wr(g_1..g_i) / prod_(j=1..i) T_(N+1-j)^(i+1-j).

    Raises:
        NotDivisible: if the quotient is not a polynomial
    """
    i, N = len(gs), T.N
    if i == 0:
        return R.one
    divisor = product(T[N + 1 - j] ** (i + 1 - j) for j in range(1, i + 1))
    return exact_quotient(wronskian(list(gs)), divisor)


def verified_stratum_data(X: PolySpace, data: EvaluatedStratumData | None = None) -> EvaluatedStratumData:
    """Stratum data of X (derived when omitted) with |Lambda| = N(d-N) and membership checked."""
    if data is None:
        data = auto_stratum_data(X)
    N, d = X.N, X.d
    if data.size != N * (d - N):
        raise MembershipFailed(f"|Lambda| = {data.size} but N(d-N) = {N * (d - N)}")
    if not stratum_membership(X, data):
        raise MembershipFailed(f"{X} is not in the cell intersection {data}")
    return data


def dual_data(data: EvaluatedStratumData, N: int, d: int) -> tuple[EvaluatedStratumData, int]:
    """(Lambda-tilde, z) and d-tilde for the dual space."""
    tilde, d_tilde = dual_tilde(list(data.partitions), N, d)
    return data.with_partitions(tilde), d_tilde


@dataclass(frozen=True)
class DualSpace:
    space: PolySpace
    data: EvaluatedStratumData
    T: TPolynomials


def dual_space_full(X: PolySpace, data: EvaluatedStratumData | None = None) -> DualSpace:
    """
    X-dagger with its stratum data.

    Raises:
        MembershipFailed: if X is not a point of the stated cell intersection
        NotDivisible: if a divided Wronskian is not a polynomial
        UnresolvedSingularity: if data is omitted and Wr(X) has irrational roots
    """
    data = verified_stratum_data(X, data)
    N = X.N
    T = associated_T(data, N)
    polys = [divided_wronskian(subset, T) for subset in itertools.combinations(X.basis, N - 1)]
    tilde, d_tilde = dual_data(data, N, X.d)
    dual = PolySpace.from_polys(polys, d_tilde)
    logger.info("dual of %s is %s in Gr(%d,%d)", X, dual, N, d_tilde)
    return DualSpace(dual, tilde, T)


def dual_space(X: PolySpace, data: EvaluatedStratumData | None = None) -> PolySpace:
    return dual_space_full(X, data).space
