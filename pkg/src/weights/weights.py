"""Dominant integral weights of g_N and their lift to N-symmetric partitions."""

import logging
from dataclasses import dataclass
from typing import Sequence

from ..errors import NotationError, OutOfRange, RankMismatch
from .partitions import Partition
from .root_system import RootSystem, root_system, root_system_for_N

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DominantWeight:
    lie_type: str
    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coords):
            raise OutOfRange(f"Dominant weight coordinates must be nonnegative: {self.coords}")

    @classmethod
    def zero(cls, rs: RootSystem) -> "DominantWeight":
        return cls(rs.lie_type, (0,) * rs.rank)

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> "DominantWeight":
        """omega_i, 1-based."""
        if not 1 <= i <= rs.rank:
            raise OutOfRange(f"omega_{i} does not exist in {rs}")
        return cls(rs.lie_type, tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def root_system(self) -> RootSystem:
        return root_system(self.lie_type, self.rank)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _check_matches(mu: DominantWeight, N: int) -> RootSystem:
    rs = root_system_for_N(N)
    if (mu.lie_type, mu.rank) != (rs.lie_type, rs.rank):
        raise RankMismatch(f"weight {mu} of {mu.lie_type}_{mu.rank} does not belong to g_{N} = {rs}")
    return rs


def assoc_partition(mu: DominantWeight, k: int, N: int) -> Partition:
    """
    The N-symmetric partition mu_(A,k).

    Its last part is k and consecutive differences lambda_i - lambda_(i+1)
    are <mu, alpha_i-check> for i <= N/2 and <mu, alpha_(N-i)-check> above.

    Raises:
        RankMismatch: if mu is not a weight of g_N
        OutOfRange: if k is negative
    """
    _check_matches(mu, N)
    if k < 0:
        raise OutOfRange(f"k must be nonnegative, got {k}")
    parts = [0] * N
    parts[N - 1] = k
    for i in range(N - 1, 0, -1):
        step = mu.coords[i - 1] if i <= N // 2 else mu.coords[N - i - 1]
        parts[i - 1] = parts[i] + step
    return Partition(tuple(parts))


def lift_symmetric(mu: DominantWeight, N: int) -> Partition:
    """gl_N-lift of a g_N-weight with vanishing N-th coordinate."""
    return assoc_partition(mu, 0, N)


def assoc_size(mu: DominantWeight, k: int, N: int) -> int:
    return assoc_partition(mu, k, N).size


def parse_weight(text: str, rs: RootSystem) -> DominantWeight:
    """Read "0,1" or "(0,1)" as a dominant weight of rs."""
    token = text.strip().strip("()")
    try:
        coords = tuple(int(c) for c in token.split(","))
    except ValueError as e:
        raise NotationError(f"Not a weight: {text!r}") from e
    if len(coords) != rs.rank:
        raise RankMismatch(f"{text!r} has {len(coords)} coordinates, {rs} has rank {rs.rank}")
    try:
        return DominantWeight(rs.lie_type, coords)
    except OutOfRange as e:
        raise NotationError(str(e)) from e


def parse_weight_list(text: str, rs: RootSystem) -> list[DominantWeight]:
    """Read "2,0;1,0;2,0"."""
    items = [item for item in text.split(";") if item.strip()]
    if not items:
        raise NotationError("empty weight list")
    return [parse_weight(item, rs) for item in items]


def weights_of(rs: RootSystem, coords: Sequence[Sequence[int]]) -> list[DominantWeight]:
    return [DominantWeight(rs.lie_type, tuple(c)) for c in coords]
