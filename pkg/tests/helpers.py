"""Builders for polynomial spaces whose Wronskians split over QQ."""

from fractions import Fraction

from src.exact_algebra import R, linear_factor
from src.poly_spaces import PolySpace


def span(d, *polys):
    return PolySpace.from_polys([R(p) if isinstance(p, int) else p for p in polys], d)


def distinct_points(rng, count, low=-4, high=4):
    values = set()
    while len(values) < count:
        values.add(Fraction(rng.randint(low, high), rng.choice([1, 1, 2, 3])))
    return sorted(values)


def split_pair(rng, base_power=0):
    """span{(x-a)^m, (x-b)^n} times (x-e)^base_power, with some room at infinity."""
    a, b, e = distinct_points(rng, 3)
    m, n = rng.sample(range(0, 5), 2)
    factor = linear_factor(e) ** base_power
    polys = [factor * linear_factor(a) ** m, factor * linear_factor(b) ** n]
    d = max(m, n) + base_power + 1 + rng.randint(0, 2)
    return PolySpace.from_polys(polys, d)


def split_triple(rng):
    """span{1, (x-b)^n, (x-c)^p} with n != p."""
    b, c = distinct_points(rng, 2)
    n, p = rng.sample(range(1, 5), 2)
    polys = [R.one, linear_factor(b) ** n, linear_factor(c) ** p]
    d = max(n, p) + 1 + rng.randint(0, 1)
    return PolySpace.from_polys(polys, d)
