"""
Exponents of polynomial spaces and membership in Schubert cell intersections.

Finite points are exact rationals; the point at infinity is the string "inf".
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import QQ

from ..errors import DependentBasis, NotationError, OutOfRange, UnresolvedSingularity
from ..exact_algebra import (
    R,
    Poly,
    degree,
    linear_factor,
    monic,
    parse_fraction,
    product,
    rational_roots,
    rref_rational,
    shift,
    to_fraction,
    wronskian,
)
from ..weights import Partition, complement_bar, parse_partition
from .space import PolySpace

logger = logging.getLogger(__name__)

INFINITY = "inf"

Point = Fraction | str


def parse_point(text: str) -> Point:
    token = text.strip().lower()
    if token in (INFINITY, "infinity", "oo"):
        return INFINITY
    return parse_fraction(token)


def format_point(z: Point) -> str:
    if z == INFINITY:
        return INFINITY
    return str(z.numerator) if z.denominator == 1 else f"{z.numerator}/{z.denominator}"


@dataclass(frozen=True)
class EvaluatedStratumData:
    points: tuple[Point, ...]
    partitions: tuple[Partition, ...]

    def __post_init__(self):
        if len(self.points) != len(self.partitions):
            raise NotationError("each point needs exactly one partition")
        if len(set(self.points)) != len(self.points):
            raise NotationError(f"points must be pairwise distinct: {[format_point(z) for z in self.points]}")
        if len({lam.N for lam in self.partitions}) > 1:
            raise NotationError("all partitions must have the same number of parts")

    @classmethod
    def of(cls, items: Sequence[tuple[Point, Partition]]) -> "EvaluatedStratumData":
        ordered = sorted(items, key=lambda item: (item[0] == INFINITY, item[0] if item[0] != INFINITY else 0))
        return cls(tuple(z for z, _ in ordered), tuple(lam for _, lam in ordered))

    @property
    def size(self) -> int:
        return sum(lam.size for lam in self.partitions)

    def finite(self) -> list[tuple[Fraction, Partition]]:
        return [(z, lam) for z, lam in zip(self.points, self.partitions) if z != INFINITY]

    def at_infinity(self) -> Partition | None:
        for z, lam in zip(self.points, self.partitions):
            if z == INFINITY:
                return lam
        return None

    def with_partitions(self, partitions: Sequence[Partition]) -> "EvaluatedStratumData":
        return EvaluatedStratumData(self.points, tuple(partitions))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{format_point(z)} -> {lam}" for z, lam in zip(self.points, self.partitions)) + "}"


def wronskian_of_space(X: PolySpace) -> Poly:
    """Monic Wronskian of X."""
    wr = wronskian(list(X.basis))
    if not wr:
        raise DependentBasis(f"{X} has zero Wronskian")
    return monic(wr)


def exponents_at(X: PolySpace, z: Point) -> list[int]:
    """Distinct vanishing orders at finite z, or distinct degrees at infinity; ascending."""
    if z == INFINITY:
        return sorted(degree(p) for p in X.basis)
    shifted = [shift(p, z) for p in X.basis]
    width = max(degree(p) for p in shifted) + 1
    rows = [[p.get((j,), QQ.zero) for j in range(width)] for p in shifted]
    _, pivots = rref_rational(rows, width)
    return list(pivots)


def finite_exponents(lam: Partition) -> list[int]:
    """lambda_N, lambda_(N-1) + 1, ..., lambda_1 + N - 1."""
    N = lam.N
    return [lam[N + 1 - i] + i - 1 for i in range(1, N + 1)]


def infinite_exponents(lam: Partition, N: int, d: int) -> list[int]:
    """Degrees lambda-bar_i + N - i, ascending."""
    bar = complement_bar(lam, N, d)
    return sorted(bar[i] + N - i for i in range(1, N + 1))


def stratum_membership(X: PolySpace, data: EvaluatedStratumData) -> bool:
    """True when X lies in the intersection of Schubert cells described by data."""
    N, d = X.N, X.d
    for z, lam in zip(data.points, data.partitions):
        if lam.N != N:
            return False
        if z == INFINITY:
            if lam[1] > d - N or exponents_at(X, z) != infinite_exponents(lam, N, d):
                return False
        elif exponents_at(X, z) != finite_exponents(lam):
            return False
    if data.size == N * (d - N):
        expected = product(linear_factor(z) ** lam.size for z, lam in data.finite())
        if wronskian_of_space(X) != expected:
            return False
    return True


def partition_from_exponents(exponents: Sequence[int]) -> Partition:
    """Inverse of finite_exponents."""
    ascending = sorted(exponents)
    return Partition(tuple(reversed([e - i for i, e in enumerate(ascending)])))


def auto_stratum_data(X: PolySpace) -> EvaluatedStratumData:
    """
    Stratum data read off X: the rational roots of Wr(X) with their exponents,
    plus infinity when its partition is nonzero.

    Raises:
        UnresolvedSingularity: if Wr(X) has a root that is not rational
    """
    N, d = X.N, X.d
    roots, rest = rational_roots(wronskian_of_space(X))
    if rest != R.one:
        raise UnresolvedSingularity(f"Wronskian factor {rest.as_expr()} has no rational roots")
    items: list[tuple[Point, Partition]] = []
    for root, _ in roots:
        z = to_fraction(root)
        items.append((z, partition_from_exponents(exponents_at(X, z))))
    degrees = sorted(X.degrees(), reverse=True)
    bar = Partition(tuple(deg - (N - i) for i, deg in enumerate(degrees, start=1)))
    at_infinity = complement_bar(bar, N, d)
    if at_infinity:
        items.append((INFINITY, at_infinity))
    data = EvaluatedStratumData.of(items)
    logger.info("stratum data of %s: %s", X, data)
    return data


@dataclass(frozen=True)
class BasePoints:
    gcd: Poly
    roots: tuple[Fraction, ...]


def base_points(X: PolySpace) -> BasePoints:
    """Monic gcd of X and its rational roots (certified base points)."""
    g = R.zero
    for p in X.basis:
        g = p if not g else g.gcd(p)
    g = monic(g)
    if degree(g) <= 0:
        return BasePoints(R.one, ())
    roots, rest = rational_roots(g)
    if rest != R.one:
        logger.warning("%s has base points off the rationals: gcd factor %s", X, rest.as_expr())
    return BasePoints(g, tuple(to_fraction(z) for z, _ in roots))


def parse_stratum_data(entries: Sequence[str], N: int) -> EvaluatedStratumData:
    """Read entries like "0:2,1,0" or "inf:2,1,0"."""
    items = []
    for entry in entries:
        point, sep, partition = entry.partition(":")
        if not sep:
            raise NotationError(f"Expected POINT:PARTITION, got {entry!r}")
        items.append((parse_point(point), parse_partition(partition, N)))
    try:
        return EvaluatedStratumData.of(items)
    except OutOfRange as e:
        raise NotationError(str(e)) from e
