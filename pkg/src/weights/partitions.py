"""
Partitions with at most N parts, padded to exactly N entries.

A Partition labels both Schubert data at a point of the osculating flag and
an irreducible polynomial gl_N-module.
"""

import logging
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

from ..errors import NotationError, OutOfRange

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.parts):
            raise OutOfRange(f"Partition parts must be nonnegative: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise OutOfRange(f"Partition parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int], N: int) -> "Partition":
        """Pad parts with zeros to length N."""
        values = [int(p) for p in parts]
        while len(values) > N and values[-1] == 0:
            values.pop()
        if len(values) > N:
            raise OutOfRange(f"{tuple(values)} has more than {N} nonzero parts")
        return cls(tuple(values) + (0,) * (N - len(values)))

    @classmethod
    def zero(cls, N: int) -> "Partition":
        return cls((0,) * N)

    @property
    def N(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based access; lambda_(N+1) reads as 0."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= self.N else 0

    def __bool__(self) -> bool:
        return any(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __add__(self, other: "Partition") -> "Partition":
        return Partition(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def contains(self, other: "Partition") -> bool:
        """True when other fits inside self as a Young diagram."""
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def sort_key(self) -> tuple:
        """Canonical multiset order sorts by descending key: size first, then lexicographic."""
        return (self.size, self.parts)

    def dynkin(self) -> tuple[int, ...]:
        """Coordinates (lambda_i - lambda_(i+1)) for the sl_N-module."""
        return tuple(a - b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partition_size(lam: Partition) -> int:
    return lam.size


def complement_bar(lam: Partition, N: int, d: int) -> Partition:
    """lambda-bar = (d-N-lambda_N, ..., d-N-lambda_1)."""
    if lam.N != N:
        lam = Partition.of(lam.parts, N)
    if lam[1] > d - N:
        raise OutOfRange(f"{lam} does not fit in the {N} x {d - N} box")
    return Partition(tuple(d - N - lam[N + 1 - i] for i in range(1, N + 1)))


def dual_tilde(labels: Sequence[Partition], N: int, d: int) -> tuple[list[Partition], int]:
    """
    Partitions and ambient dimension of the dual space.

    lambda-tilde_i = lambda_1 - lambda_(N+1-i) and d-tilde = sum(lambda_1) - d + 2N.

    Raises:
        OutOfRange: if the sizes do not add up to N(d-N)
    """
    total = sum(lam.size for lam in labels)
    if total != N * (d - N):
        raise OutOfRange(f"|Lambda| = {total} but N(d-N) = {N * (d - N)}")
    tilde = [Partition(tuple(lam[1] - lam[N + 1 - i] for i in range(1, N + 1))) for lam in labels]
    d_tilde = sum(lam[1] for lam in labels) - d + 2 * N
    return tilde, d_tilde


def is_N_symmetric(lam: Partition) -> bool:
    """lambda_i - lambda_(i+1) == lambda_(N-i) - lambda_(N-i+1) for all i."""
    diffs = [lam[i] - lam[i + 1] for i in range(1, lam.N)]
    return diffs == diffs[::-1]


def box_partitions(N: int, width: int, size: int | None = None) -> Iterator[Partition]:
    """Nonzero partitions inside the N x width box, in canonical (descending) order."""

    def fill(prefix: list[int], cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == N:
            yield tuple(prefix)
            return
        for part in range(cap, -1, -1):
            yield from fill(prefix + [part], part)

    found = [Partition(parts) for parts in fill([], width) if any(parts)]
    if size is not None:
        found = [lam for lam in found if lam.size == size]
    yield from sorted(found, reverse=True)


def parse_partition(text: str, N: int) -> Partition:
    """Read "4,2,2,0" or "(4,2,2,0)" as a partition padded to N parts."""
    token = text.strip().strip("()")
    try:
        parts = [int(p) for p in token.split(",")] if token else []
    except ValueError as e:
        raise NotationError(f"Not a partition: {text!r}") from e
    try:
        return Partition.of(parts, N)
    except OutOfRange as e:
        raise NotationError(str(e)) from e
