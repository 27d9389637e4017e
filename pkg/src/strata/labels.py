"""
Stratum labels: multisets of partitions (type A) and of (weight, k) pairs (types B/C).

Labels keep their members in canonical order so that equal multisets compare
and hash equal.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from ..rep_engine import invariant_dim_A, invariant_dim_BC
from ..weights import DominantWeight, Partition, assoc_partition, root_system_for_N


@dataclass(frozen=True)
class StratumLabelA:
    N: int
    d: int
    parts: tuple[Partition, ...]

    @classmethod
    def of(cls, N: int, d: int, parts: Iterable[Partition]) -> "StratumLabelA":
        padded = (Partition.of(lam.parts, N) for lam in parts)
        return cls(N, d, tuple(sorted(padded, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(lam.size for lam in self.parts)

    def sizes(self) -> list[int]:
        return [lam.size for lam in self.parts]

    def partitions(self) -> tuple[Partition, ...]:
        return self.parts

    @cached_property
    def invariant_dim(self) -> int:
        return invariant_dim_A(self.parts, self.N)

    def is_d_nontrivial(self) -> bool:
        """All parts nonzero and inside the box, |Lambda| = N(d-N), nonzero invariants."""
        if any(not lam or lam[1] > self.d - self.N for lam in self.parts):
            return False
        if self.size != self.N * (self.d - self.N):
            return False
        return self.invariant_dim > 0

    def replace(self, i: int, j: int, merged: Partition) -> "StratumLabelA":
        rest = [lam for s, lam in enumerate(self.parts) if s not in (i, j)]
        return StratumLabelA.of(self.N, self.d, rest + [merged])

    def __str__(self) -> str:
        return "(" + ",".join(str(lam) for lam in self.parts) + ")"


@dataclass(frozen=True, order=True)
class SPair:
    weight: DominantWeight
    k: int = 0

    def lift(self, N: int) -> Partition:
        return _lift(self, N)

    def __str__(self) -> str:
        return f"{self.weight}_{self.k}" if self.k else str(self.weight)


@dataclass(frozen=True)
class SStratumLabel:
    N: int
    d: int
    pairs: tuple[SPair, ...]

    @classmethod
    def of(cls, N: int, d: int, pairs: Iterable[SPair]) -> "SStratumLabel":
        items = list(pairs)
        key = lambda p: (-p.lift(N).size, p.weight.coords, p.k)  # noqa: E731
        return cls(N, d, tuple(sorted(items, key=key)))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return sum(lam.size for lam in self.partitions())

    def sizes(self) -> list[int]:
        return [lam.size for lam in self.partitions()]

    def partitions(self) -> tuple[Partition, ...]:
        """The A-lift Lambda_(A,k)."""
        return tuple(p.lift(self.N) for p in self.pairs)

    def lift_A(self) -> StratumLabelA:
        return StratumLabelA.of(self.N, self.d, self.partitions())

    @cached_property
    def invariant_dim(self) -> int:
        return invariant_dim_BC(root_system_for_N(self.N), [p.weight for p in self.pairs])

    def is_d_nontrivial(self) -> bool:
        lifts = self.partitions()
        if any(not lam or lam[1] > self.d - self.N for lam in lifts):
            return False
        if sum(lam.size for lam in lifts) != self.N * (self.d - self.N):
            return False
        return self.invariant_dim > 0

    def replace(self, i: int, j: int, merged: SPair) -> "SStratumLabel":
        rest = [p for s, p in enumerate(self.pairs) if s not in (i, j)]
        return SStratumLabel.of(self.N, self.d, rest + [merged])

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.pairs) + ")"


@lru_cache(maxsize=None)
def _lift(pair: SPair, N: int) -> Partition:
    return assoc_partition(pair.weight, pair.k, N)


StratumLabel = StratumLabelA | SStratumLabel


def sort_labels(labels: Iterable[StratumLabel]) -> list[StratumLabel]:
    """Deterministic node order: larger strata first, then by printed label."""
    return sorted(set(labels), key=lambda lab: (-lab.n, str(lab)))
