"""Dimensions, symmetry coefficients and degrees of the (reduced) Wronski map."""

import logging
from collections import Counter, defaultdict
from fractions import Fraction
from math import factorial, prod

from ..errors import OddN, OutOfRange
from .enumerate import enumerate_strata, enumerate_strata_BC
from .labels import SStratumLabel, StratumLabel

logger = logging.getLogger(__name__)


def symmetry_coefficient(label: StratumLabel) -> int:
    """
    b(Lambda): product over groups of equal size |lambda| of the multinomial
    counting distinct orderings of the group. BC labels use their A-lift.
    """
    parts = label.partitions()
    groups: dict[int, Counter] = defaultdict(Counter)
    for lam in parts:
        groups[lam.size][lam] += 1
    result = 1
    for counter in groups.values():
        result *= factorial(sum(counter.values())) // prod(factorial(c) for c in counter.values())
    return result


def wronski_degree_A(N: int, d: int) -> int:
    """(N(d-N))! 0! 1! ... (d-N-1)! / (N! (N+1)! ... (d-1)!)."""
    if not 1 <= N <= d:
        raise OutOfRange(f"Need 1 <= N <= d, got N={N}, d={d}")
    numerator = factorial(N * (d - N)) * prod(factorial(i) for i in range(d - N))
    denominator = prod(factorial(j) for j in range(N, d))
    return numerator // denominator


def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2))


def wronski_degree_BC(N: int, d: int) -> int:
    """
    Degree of the reduced Wronski map on sGr(2r, d):

        (N-1)!! prod_(i<j<=r) (j-i)(N-i-j+1) prod_(k<r) (2(d-N+k))! / ((d-k-1)! (d-N+k)!)

    Raises:
        OddN: for odd N, where no closed form is available
    """
    if N % 2:
        raise OddN(f"closed degree formula needs even N, got N={N}")
    if not 2 <= N <= d:
        raise OutOfRange(f"Need 2 <= N <= d, got N={N}, d={d}")
    r = N // 2
    result = Fraction(_double_factorial(N - 1))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            result *= (j - i) * (N - i - j + 1)
    for k in range(r):
        result *= Fraction(factorial(2 * (d - N + k)), factorial(d - k - 1) * factorial(d - N + k))
    if result.denominator != 1:
        raise ArithmeticError(f"non-integral degree {result} for N={N}, d={d}")
    return int(result)


def covering_degree(label: StratumLabel) -> int:
    """b(Lambda) times the invariant dimension."""
    return symmetry_coefficient(label) * label.invariant_dim


def reduced_wronski_degree(label: SStratumLabel) -> int:
    """Degree of the reduced Wronski map restricted to the stratum of a BC label."""
    if not isinstance(label, SStratumLabel):
        raise TypeError("reduced Wronski degrees are defined for self-dual strata")
    return covering_degree(label)


def top_strata_BC(N: int, d: int, max_cells: int | None = None) -> list[SStratumLabel]:
    """d-nontrivial labels of maximal dimension."""
    labels = enumerate_strata_BC(N, d, max_cells)
    if not labels:
        return []
    top = max(label.n for label in labels)
    return [label for label in labels if label.n == top]


def multiplicity_weight(label: StratumLabel, size: int) -> int:
    """Root multiplicity of the (reduced) Wronskian at a point carrying a member of the given size."""
    if not isinstance(label, SStratumLabel):
        return size
    divisor = label.N if label.N % 2 else label.N // 2
    value, remainder = divmod(size, divisor)
    if remainder:
        raise ArithmeticError(f"{label}: size {size} is not divisible by {divisor}")
    return value


def preimage_fibers(
    N: int, d: int, family: str, max_cells: int | None = None
) -> dict[tuple[int, ...], list[StratumLabel]]:
    """Strata grouped by the multiset m of root multiplicities of their (reduced) Wronskian."""
    fibers: dict[tuple[int, ...], list[StratumLabel]] = defaultdict(list)
    for label in enumerate_strata(N, d, family, max_cells):
        key = tuple(sorted((multiplicity_weight(label, s) for s in label.sizes()), reverse=True))
        fibers[key].append(label)
    return dict(sorted(fibers.items(), reverse=True))
