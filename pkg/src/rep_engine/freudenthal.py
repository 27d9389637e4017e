"""Weight systems of irreducible highest-weight modules via Freudenthal's recursion."""

import logging
from fractions import Fraction
from functools import lru_cache

from ..weights import RootSystem, Weight

logger = logging.getLogger(__name__)


def weight_set(rs: RootSystem, highest: Weight) -> frozenset[Weight]:
    """All weights of V_highest: the closure of {highest} under lowering along simple-root strings."""
    seen = {tuple(highest)}
    frontier = [tuple(highest)]
    while frontier:
        nxt = []
        for mu in frontier:
            for i, c in enumerate(mu):
                current = mu
                for _ in range(max(c, 0)):
                    current = tuple(a - b for a, b in zip(current, rs.cartan[i]))
                    if current not in seen:
                        seen.add(current)
                        nxt.append(current)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, highest: Weight) -> tuple[tuple[Weight, int], ...]:
    weights = weight_set(rs, highest)
    dominant = sorted((mu for mu in weights if rs.is_dominant(mu)), key=rs.norm_shifted, reverse=True)
    top = rs.norm_shifted(highest)
    mult: dict[Weight, int] = {tuple(highest): 1}

    def lookup(mu: Weight) -> int:
        if mu not in weights:
            return 0
        return mult[rs.dominant_conjugate(mu)[0]]

    for mu in dominant:
        if mu == tuple(highest):
            continue
        total = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while True:
                shifted = tuple(a + k * b for a, b in zip(mu, alpha))
                m = lookup(shifted)
                if not m:
                    break
                total += m * rs.inner(shifted, alpha)
                k += 1
        value = 2 * total / (top - rs.norm_shifted(mu))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu} in V_{highest}")
        mult[mu] = int(value)
    logger.debug("V_%s of %s has %d dominant weights", highest, rs, len(dominant))
    return tuple(sorted(mult.items()))


def weight_multiplicities(rs: RootSystem, highest: Weight) -> dict[Weight, int]:
    """
    Full weight system of V_highest keyed by Dynkin coordinates.

    Multiplicities are constant on Weyl orbits, so the recursion only runs over
    dominant weights in order of decreasing |mu + rho|^2.
    """
    rs.check(highest)
    dominant = dict(_dominant_multiplicities(rs, tuple(highest)))
    result = {}
    for mu in weight_set(rs, tuple(highest)):
        m = dominant[rs.dominant_conjugate(mu)[0]]
        if m:
            result[mu] = m
    return result
