"""
Root systems of types A, B and C in Dynkin coordinates.

Weights are integer tuples of pairings <lambda, alpha_i-check>. The bilinear
form, positive roots and reflections are derived from the orthogonal
epsilon-model:

    A_n: alpha_i = e_i - e_(i+1) in R^(n+1), projected orthogonally to sum(e)
    B_r: alpha_i = e_i - e_(i+1), alpha_r = e_r
    C_r: alpha_i = e_i - e_(i+1), alpha_r = 2 e_r
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from ..errors import OutOfRange, RankMismatch

logger = logging.getLogger(__name__)

Weight = tuple[int, ...]
_Vector = tuple[Fraction, ...]

LIE_TYPES = ("A", "B", "C")


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _unit(size: int, i: int, scale: int = 1) -> _Vector:
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(size))


def _combine(*terms: tuple[int | Fraction, _Vector]) -> _Vector:
    size = len(terms[0][1])
    return tuple(sum((Fraction(c) * v[j] for c, v in terms), Fraction(0)) for j in range(size))


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int

    def __post_init__(self):
        if self.lie_type not in LIE_TYPES:
            raise RankMismatch(f"Unsupported Lie type: {self.lie_type}")
        if self.rank < 1:
            raise OutOfRange(f"Rank must be positive, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.lie_type}_{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.lie_type == "A" else self.rank

    @cached_property
    def simple_roots(self) -> tuple[_Vector, ...]:
        n, r = self.ambient_dim, self.rank
        roots = [_combine((1, _unit(n, i)), (-1, _unit(n, i + 1))) for i in range(r - 1)]
        if self.lie_type == "A":
            roots.append(_combine((1, _unit(n, r - 1)), (-1, _unit(n, r))))
        elif self.lie_type == "B":
            roots.append(_unit(n, r - 1))
        else:
            roots.append(_unit(n, r - 1, 2))
        return tuple(roots)

    @cached_property
    def fundamental_weights(self) -> tuple[_Vector, ...]:
        n, r = self.ambient_dim, self.rank
        weights = []
        for i in range(1, r + 1):
            if self.lie_type == "A":
                shift = Fraction(i, n)
                weights.append(tuple(Fraction(1 if j < i else 0) - shift for j in range(n)))
            elif self.lie_type == "B" and i == r:
                weights.append(tuple(Fraction(1, 2) for _ in range(n)))
            else:
                weights.append(tuple(Fraction(1 if j < i else 0) for j in range(n)))
        return tuple(weights)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """cartan[i][j] = <alpha_i, alpha_j-check>; row j is alpha_j in Dynkin coordinates."""
        return tuple(tuple(int(self._pairing(a, b)) for b in self.simple_roots) for a in self.simple_roots)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """(omega_i, omega_j)."""
        w = self.fundamental_weights
        return tuple(tuple(_dot(a, b) for b in w) for a in w)

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        """Positive roots in Dynkin coordinates."""
        n = self.ambient_dim
        vectors: list[_Vector] = []
        for i in range(n):
            for j in range(i + 1, n):
                vectors.append(_combine((1, _unit(n, i)), (-1, _unit(n, j))))
                if self.lie_type != "A":
                    vectors.append(_combine((1, _unit(n, i)), (1, _unit(n, j))))
            if self.lie_type == "B":
                vectors.append(_unit(n, i))
            elif self.lie_type == "C":
                vectors.append(_unit(n, i, 2))
        return tuple(self.from_epsilon(v) for v in vectors)

    def _pairing(self, vector: _Vector, root: _Vector) -> Fraction:
        return 2 * _dot(vector, root) / _dot(root, root)

    def from_epsilon(self, vector: Sequence[Fraction | int]) -> Weight:
        values = tuple(Fraction(v) for v in vector)
        pairings = [self._pairing(values, a) for a in self.simple_roots]
        if any(p.denominator != 1 for p in pairings):
            raise OutOfRange(f"{vector} is not an integral weight of {self}")
        return tuple(int(p) for p in pairings)

    def to_epsilon(self, weight: Sequence[int]) -> _Vector:
        self.check(weight)
        terms = [(c, w) for c, w in zip(weight, self.fundamental_weights)]
        return _combine(*terms)

    def check(self, weight: Sequence[int]) -> None:
        if len(weight) != self.rank:
            raise RankMismatch(f"{tuple(weight)} has {len(weight)} coordinates, {self} has rank {self.rank}")

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        gram = self.gram
        return sum(
            (Fraction(a) * b * gram[i][j] for i, a in enumerate(u) if a for j, b in enumerate(v) if b),
            Fraction(0),
        )

    def norm_shifted(self, weight: Sequence[int]) -> Fraction:
        """|mu + rho|^2."""
        shifted = tuple(a + 1 for a in weight)
        return self.inner(shifted, shifted)

    def reflect(self, weight: Weight, j: int) -> Weight:
        """s_j(mu) = mu - <mu, alpha_j-check> alpha_j."""
        c = weight[j]
        return tuple(w - c * a for w, a in zip(weight, self.cartan[j]))

    def dominant_conjugate(self, weight: Weight) -> tuple[Weight, int]:
        """Dominant element of the Weyl orbit and the parity of the reflections used."""
        current = tuple(weight)
        flips = 0
        while True:
            negative = next((j for j, c in enumerate(current) if c < 0), None)
            if negative is None:
                return current, flips
            current = self.reflect(current, negative)
            flips += 1

    def orbit(self, weight: Weight) -> frozenset[Weight]:
        seen = {tuple(weight)}
        frontier = [tuple(weight)]
        while frontier:
            nxt = []
            for w in frontier:
                for j in range(self.rank):
                    image = self.reflect(w, j)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        return frozenset(seen)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(c >= 0 for c in weight)

    def dual(self, weight: Weight) -> Weight:
        """Highest weight of the dual module."""
        if self.lie_type == "A":
            return tuple(reversed(weight))
        return tuple(weight)


@lru_cache(maxsize=None)
def root_system(lie_type: str, rank: int) -> RootSystem:
    return RootSystem(lie_type.upper(), rank)


def root_system_for_N(N: int) -> RootSystem:
    """g_N: B_r = so_(2r+1) for N = 2r and C_r = sp_(2r) for N = 2r+1 (C_1 = sl_2 for N = 3)."""
    if N < 2:
        raise OutOfRange(f"g_N is defined for N >= 2, got N={N}")
    r = N // 2
    return root_system("B" if N % 2 == 0 else "C", r)


def weyl_dim(rs: RootSystem, weight: Sequence[int]) -> int:
    """prod over positive roots of (lambda + rho, alpha) / (rho, alpha)."""
    rs.check(weight)
    shifted = tuple(a + 1 for a in weight)
    result = Fraction(1)
    for alpha in rs.positive_roots:
        result *= rs.inner(shifted, alpha) / rs.inner(rs.rho, alpha)
    if result.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {result} for {weight} in {rs}")
    return int(result)
