"""Enumeration of d-nontrivial stratum labels of Gr(N,d) and sGr(N,d)."""

import itertools
import logging
from typing import Callable, Iterator, Sequence, TypeVar

from ..settings_config import check_budget
from ..weights import DominantWeight, box_partitions, root_system_for_N
from .labels import SPair, SStratumLabel, StratumLabelA, sort_labels

logger = logging.getLogger(__name__)

T = TypeVar("T")


def multisets_with_sum(items: Sequence[T], size: Callable[[T], int], total: int) -> Iterator[list[T]]:
    """Multisets of items (by index, nondecreasing) whose sizes add up to total."""

    def extend(start: int, remaining: int, chosen: list[T]) -> Iterator[list[T]]:
        if remaining == 0:
            yield list(chosen)
            return
        for index in range(start, len(items)):
            weight = size(items[index])
            if 0 < weight <= remaining:
                chosen.append(items[index])
                yield from extend(index, remaining - weight, chosen)
                chosen.pop()

    if total == 0:
        return
    yield from extend(0, total, [])


def enumerate_strata_A(N: int, d: int, max_cells: int | None = None) -> list[StratumLabelA]:
    """
    All d-nontrivial labels of Gr(N,d), canonically ordered.

    Raises:
        OutOfRange: unless 1 <= N <= d
        BudgetExceeded: if N(d-N) exceeds the budget
    """
    check_budget(N, d, max_cells)
    cells = N * (d - N)
    candidates = list(box_partitions(N, d - N))
    labels = []
    examined = 0
    for parts in multisets_with_sum(candidates, lambda lam: lam.size, cells):
        examined += 1
        label = StratumLabelA.of(N, d, parts)
        if label.is_d_nontrivial():
            labels.append(label)
    logger.info("Gr(%d,%d): %d of %d multisets are d-nontrivial", N, d, len(labels), examined)
    return sort_labels(labels)


def candidate_pairs(N: int, d: int) -> list[SPair]:
    """Pairs (mu, k) whose lift is nonzero and fits in the N x (d-N) box."""
    rs = root_system_for_N(N)
    width = d - N
    pairs = []
    for coords in itertools.product(range(width + 1), repeat=rs.rank):
        weight = DominantWeight(rs.lie_type, coords)
        for k in range(width + 1):
            pair = SPair(weight, k)
            lift = pair.lift(N)
            if lift and lift[1] <= width:
                pairs.append(pair)
    return sorted(pairs, key=lambda p: (-p.lift(N).size, p.weight.coords, p.k))


def enumerate_strata_BC(N: int, d: int, max_cells: int | None = None) -> list[SStratumLabel]:
    """
    All d-nontrivial labels (Lambda, k) of sGr(N,d), canonically ordered.

    Raises:
        OutOfRange: unless 2 <= N <= d
        BudgetExceeded: if N(d-N) exceeds the budget
    """
    check_budget(N, d, max_cells)
    root_system_for_N(N)
    cells = N * (d - N)
    candidates = candidate_pairs(N, d)
    labels = []
    examined = 0
    for pairs in multisets_with_sum(candidates, lambda p: p.lift(N).size, cells):
        examined += 1
        label = SStratumLabel.of(N, d, pairs)
        if label.is_d_nontrivial():
            labels.append(label)
    logger.info("sGr(%d,%d): %d of %d multisets are d-nontrivial", N, d, len(labels), examined)
    return sort_labels(labels)


def enumerate_strata(N: int, d: int, family: str, max_cells: int | None = None) -> list:
    if family == "A":
        return enumerate_strata_A(N, d, max_cells)
    return enumerate_strata_BC(N, d, max_cells)
