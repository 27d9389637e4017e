"""Single merges of stratum labels: two members collide into one."""

import logging

from ..rep_engine import gl_tensor_decompose, tensor_decompose
from ..weights import DominantWeight, assoc_partition, root_system_for_N
from .labels import SPair, SStratumLabel, StratumLabelA, sort_labels

logger = logging.getLogger(__name__)


def merge_candidates_A(label: StratumLabelA) -> list[StratumLabelA]:
    """Every label obtained by replacing two partitions with a component xi of their gl_N tensor product."""
    found = set()
    seen_pairs = set()
    for i in range(label.n):
        for j in range(i + 1, label.n):
            pair = (label.parts[i], label.parts[j])
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
            for xi in gl_tensor_decompose(*pair, label.N):
                found.add(label.replace(i, j, xi))
    return sort_labels(found)


def simple_degenerations_A(label: StratumLabelA) -> list[StratumLabelA]:
    """d-nontrivial single merges with xi_1 <= d-N."""
    width = label.d - label.N
    result = [
        merged
        for merged in merge_candidates_A(label)
        if all(lam[1] <= width for lam in merged.parts) and merged.is_d_nontrivial()
    ]
    logger.debug("%s: %d simple degenerations", label, len(result))
    return result


def merge_candidates_BC(label: SStratumLabel) -> list[SStratumLabel]:
    """
    Merges (lambda, k1), (mu, k2) -> (xi, l) over components xi of V_lambda (x) V_mu,
    with l = (|lambda_(A,k1)| + |mu_(A,k2)| - |xi_(A,0)|) / N integral and nonnegative.
    """
    N = label.N
    rs = root_system_for_N(N)
    found = set()
    seen_pairs = set()
    for i in range(label.n):
        for j in range(i + 1, label.n):
            first, second = label.pairs[i], label.pairs[j]
            if (first, second) in seen_pairs:
                continue
            seen_pairs.add((first, second))
            total = first.lift(N).size + second.lift(N).size
            for xi in tensor_decompose(rs, first.weight.coords, second.weight.coords):
                weight = DominantWeight(rs.lie_type, xi)
                l, remainder = divmod(total - assoc_partition(weight, 0, N).size, N)
                if remainder or l < 0:
                    continue
                found.add(label.replace(i, j, SPair(weight, l)))
    return sort_labels(found)


def simple_degenerations_BC(label: SStratumLabel) -> list[SStratumLabel]:
    """d-nontrivial single merges."""
    result = [merged for merged in merge_candidates_BC(label) if merged.is_d_nontrivial()]
    logger.debug("%s: %d simple degenerations", label, len(result))
    return result


def simple_degenerations(label) -> list:
    if isinstance(label, StratumLabelA):
        return simple_degenerations_A(label)
    return simple_degenerations_BC(label)


def merge_candidates(label) -> list:
    if isinstance(label, StratumLabelA):
        return merge_candidates_A(label)
    return merge_candidates_BC(label)
