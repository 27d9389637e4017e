"""
Dimensions of invariant subspaces in multiple tensor products.

Type A labels are partitions (gl_N-modules); their sl_N-invariants are read
from a Racah-Speiser fold on A_(N-1). Types B and C fold dominant weights of
g_N directly. Folds run over canonically sorted labels with memoized prefixes.
"""

import logging
from functools import lru_cache
from typing import Sequence

from ..errors import RankMismatch
from ..weights import DominantWeight, Partition, RootSystem, Weight, root_system
from .racah_speiser import tensor_decompose, tensor_with

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _fold(rs: RootSystem, weights: tuple[Weight, ...]) -> tuple[tuple[Weight, int], ...]:
    if not weights:
        return (((0,) * rs.rank, 1),)
    if len(weights) == 1:
        return ((weights[0], 1),)
    module = dict(_fold(rs, weights[:-1]))
    return tuple(sorted(tensor_with(rs, module, weights[-1]).items()))


def fold_decompose(rs: RootSystem, weights: Sequence[Weight]) -> dict[Weight, int]:
    """Irreducible components of the tensor product of all V_w."""
    for w in weights:
        rs.check(w)
    return dict(_fold(rs, tuple(sorted(tuple(w) for w in weights))))


def hom_multiplicity(rs: RootSystem, xi: Weight, weights: Sequence[Weight]) -> int:
    """dim Hom(V_xi, tensor of V_w)."""
    return fold_decompose(rs, weights).get(tuple(xi), 0)


def _invariants(rs: RootSystem, weights: list[Weight]) -> int:
    if not weights:
        return 1
    ordered = sorted(weights)
    last = ordered.pop()
    return hom_multiplicity(rs, rs.dual(last), ordered)


def invariant_dim_BC(rs: RootSystem, labels: Sequence[DominantWeight]) -> int:
    """dim (V_lambda1 (x) ... (x) V_lambdan)^g for g of type B or C."""
    for lam in labels:
        if (lam.lie_type, lam.rank) != (rs.lie_type, rs.rank):
            raise RankMismatch(f"weight {lam} of {lam.lie_type}_{lam.rank} used with {rs}")
    return _invariants(rs, [lam.coords for lam in labels])


def _type_a(N: int) -> RootSystem:
    return root_system("A", N - 1)


def invariant_dim_A(labels: Sequence[Partition], N: int) -> int:
    """dim (V_lambda1 (x) ... (x) V_lambdan)^(sl_N); zero unless N divides |Lambda|."""
    labels = [Partition.of(lam.parts, N) for lam in labels]
    if sum(lam.size for lam in labels) % N:
        return 0
    if N == 1:
        return 1
    return _invariants(_type_a(N), [lam.dynkin() for lam in labels])


def gl_tensor_decompose(lam: Partition, mu: Partition, N: int) -> dict[Partition, int]:
    """V_lam (x) V_mu for gl_N, components as partitions with at most N parts."""
    lam, mu = Partition.of(lam.parts, N), Partition.of(mu.parts, N)
    size = lam.size + mu.size
    if N == 1:
        return {Partition((size,)): 1}
    result = {}
    for dynkin, m in tensor_decompose(_type_a(N), lam.dynkin(), mu.dynkin()).items():
        result[partition_from_dynkin(dynkin, size, N)] = m
    return result


def partition_from_dynkin(dynkin: Sequence[int], size: int, N: int) -> Partition:
    """The partition with the given sl_N-coordinates and total size."""
    # lambda_i = lambda_N + sum_(j >= i) c_j, so size = N lambda_N + sum_j j c_j
    weighted = sum((j + 1) * c for j, c in enumerate(dynkin))
    last, remainder = divmod(size - weighted, N)
    if remainder or last < 0:
        raise ValueError(f"no partition of {size} with sl_{N} coordinates {tuple(dynkin)}")
    parts = [last] * N
    for i in range(N - 2, -1, -1):
        parts[i] = parts[i + 1] + dynkin[i]
    return Partition(tuple(parts))


def hom_multiplicity_A(xi: Partition, labels: Sequence[Partition], N: int) -> int:
    """dim Hom_(gl_N)(V_xi, tensor of V_lambda)."""
    xi = Partition.of(xi.parts, N)
    labels = [Partition.of(lam.parts, N) for lam in labels]
    if xi.size != sum(lam.size for lam in labels):
        return 0
    if N == 1:
        return 1
    return hom_multiplicity(_type_a(N), xi.dynkin(), [lam.dynkin() for lam in labels])


def pair_invariant_A(lam: Partition, mu: Partition, N: int) -> int:
    """1 iff lambda_i = k - mu_(N+1-i) for some integer k >= mu_1."""
    lam, mu = Partition.of(lam.parts, N), Partition.of(mu.parts, N)
    k = lam[1] + mu[N]
    if k < mu[1]:
        return 0
    return int(all(lam[i] == k - mu[N + 1 - i] for i in range(1, N + 1)))


def cache_clear() -> None:
    _fold.cache_clear()
