"""Tensor product decomposition by the Racah-Speiser (Brauer-Klimyk) algorithm."""

import logging
from collections import defaultdict
from functools import lru_cache

from ..weights import RootSystem, Weight, weyl_dim
from .freudenthal import weight_multiplicities

logger = logging.getLogger(__name__)


def _brauer_klimyk(rs: RootSystem, highest: Weight, supplier: Weight) -> dict[Weight, int]:
    """V_highest (x) V_supplier, summing over the weights of V_supplier."""
    result: dict[Weight, int] = defaultdict(int)
    for nu, m in weight_multiplicities(rs, supplier).items():
        shifted = tuple(a + b + 1 for a, b in zip(highest, nu))
        dominant, flips = rs.dominant_conjugate(shifted)
        if 0 in dominant:
            continue
        component = tuple(c - 1 for c in dominant)
        result[component] += -m if flips % 2 else m
    if any(m < 0 for m in result.values()):
        raise ArithmeticError(f"negative multiplicity in {highest} x {supplier} for {rs}")
    return {w: m for w, m in result.items() if m}


@lru_cache(maxsize=None)
def _decompose_pair(rs: RootSystem, first: Weight, second: Weight) -> tuple[tuple[Weight, int], ...]:
    """Cached on the lexicographically ordered pair; the smaller module supplies the weights."""
    if weyl_dim(rs, second) > weyl_dim(rs, first):
        first, second = second, first
    return tuple(sorted(_brauer_klimyk(rs, first, second).items()))


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of the irreducible components of V_lam (x) V_mu."""
    rs.check(lam)
    rs.check(mu)
    first, second = sorted((tuple(lam), tuple(mu)))
    return dict(_decompose_pair(rs, first, second))


def tensor_with(rs: RootSystem, module: dict[Weight, int], mu: Weight) -> dict[Weight, int]:
    """(sum of m_c V_c) (x) V_mu."""
    result: dict[Weight, int] = defaultdict(int)
    for component, m in module.items():
        for nu, k in tensor_decompose(rs, component, mu).items():
            result[nu] += m * k
    return dict(result)


def cache_info() -> str:
    return str(_decompose_pair.cache_info())
