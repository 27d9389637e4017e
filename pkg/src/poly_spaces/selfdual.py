"""Self-duality certificates: X = g * X-dagger for a polynomial g."""

import logging
from dataclasses import dataclass
from enum import Enum

from ..errors import NotAPower, NotDivisible
from ..exact_algebra import R, Poly, exact_quotient, poly_nth_root
from .duality import dual_space_full
from .exponents import EvaluatedStratumData, wronskian_of_space
from .space import PolySpace, same_span

logger = logging.getLogger(__name__)


class SelfDuality(Enum):
    NOT_SELF_DUAL = "not_self_dual"
    SELF_DUAL = "self_dual"
    PURE = "pure"


@dataclass(frozen=True)
class SelfDualResult:
    status: SelfDuality
    g: Poly | None = None
    dual: PolySpace | None = None

    @property
    def is_self_dual(self) -> bool:
        return self.status is not SelfDuality.NOT_SELF_DUAL


def selfdual_check(X: PolySpace, data: EvaluatedStratumData | None = None) -> SelfDualResult:
    """
    Propose g as the monic N-th root of Wr(X)/Wr(X-dagger), then verify
    g * X-dagger == X by exact linear algebra.
    """
    dual = dual_space_full(X, data).space
    N = X.N
    try:
        ratio = exact_quotient(wronskian_of_space(X), wronskian_of_space(dual))
        g = poly_nth_root(ratio, N)
    except (NotDivisible, NotAPower) as e:
        logger.info("%s is not self-dual: %s", X, e)
        return SelfDualResult(SelfDuality.NOT_SELF_DUAL, dual=dual)
    if not same_span([g * p for p in dual.basis], X.basis):
        logger.info("%s is not self-dual: g * dual differs from X", X)
        return SelfDualResult(SelfDuality.NOT_SELF_DUAL, dual=dual)
    if g == R.one:
        return SelfDualResult(SelfDuality.PURE, g=g, dual=dual)
    return SelfDualResult(SelfDuality.SELF_DUAL, g=g, dual=dual)
