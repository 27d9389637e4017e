"""Univariate polynomials and rational functions over QQ, built on sympy's sparse rings."""

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

from ..errors import NotAPower, NotationError, NotDivisible

logger = logging.getLogger(__name__)

# One polynomial ring and its fraction field serve the whole package.
R, x = ring("x", QQ)
K, X = field("x", QQ)

Poly = PolyElement
RatFunc = FracElement
Rat = type(QQ.one)


def to_rat(value: int | Fraction | str) -> Rat:
    """Convert an integer, Fraction or "p/q" string to a QQ element."""
    if isinstance(value, str):
        value = parse_fraction(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, QQ.dtype):
        return value
    raise NotationError(f"Unsupported coefficient type: {type(value).__name__}")


def to_fraction(value: Rat) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def parse_fraction(text: str) -> Fraction:
    """Parse "p", "-p" or "p/q"; floating point notation is rejected."""
    token = text.strip()
    if not token or any(ch in token for ch in ".eE"):
        raise NotationError(f"Not an exact rational: {text!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise NotationError(f"Not an exact rational: {text!r}") from e


def format_fraction(value: Rat | Fraction) -> str:
    frac = value if isinstance(value, Fraction) else to_fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def poly_from_coeffs(coeffs: Sequence[int | Fraction | str | Rat]) -> Poly:
    """Build a polynomial from coefficients listed low to high degree."""
    terms = {(i,): to_rat(c) for i, c in enumerate(coeffs)}
    return R.from_dict({monom: c for monom, c in terms.items() if c})


def coeffs_of(p: Poly) -> list[Rat]:
    """Coefficients low to high; the zero polynomial gives an empty list."""
    if not p:
        return []
    return [p.get((i,), QQ.zero) for i in range(degree(p) + 1)]


def degree(p: Poly) -> int:
    """Degree with the convention deg(0) = -1."""
    if not p:
        return -1
    return max(monom[0] for monom in p.keys())


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return p.monic()


def linear_factor(z: Rat | Fraction | int) -> Poly:
    return x - to_rat(z)


def exact_quotient(p: Poly, q: Poly) -> Poly:
    """p / q when q divides p exactly, otherwise NotDivisible."""
    if not q:
        raise NotDivisible("division by the zero polynomial")
    quotient, remainder = divmod(p, q)
    if remainder:
        raise NotDivisible(f"{q.as_expr()} does not divide {p.as_expr()}")
    return quotient


def product(polys: Iterable[Poly]) -> Poly:
    result = R.one
    for p in polys:
        result = result * p
    return result


def poly_nth_root(p: Poly, n: int) -> Poly:
    """
    Monic q with q**n == p, found by matching coefficients from the top degree down.

    Raises:
        NotAPower: if p is not an exact n-th power over QQ
    """
    if n < 1:
        raise ValueError(f"root order must be positive, got {n}")
    if not p or p.LC != QQ.one:
        raise ValueError("poly_nth_root expects a nonzero monic polynomial")
    if n == 1:
        return p
    total = degree(p)
    if total % n:
        raise NotAPower(f"degree {total} is not divisible by {n}")
    m = total // n
    root = x**m
    for k in range(1, m + 1):
        residue = p - root**n
        coefficient = residue.get((total - k,), QQ.zero)
        if coefficient:
            root = root + (coefficient / n) * x ** (m - k)
    if root**n != p:
        raise NotAPower(f"{p.as_expr()} is not an exact {n}-th power")
    return root


def rational_roots(p: Poly) -> tuple[list[tuple[Rat, int]], Poly]:
    """
    Rational roots with multiplicities, plus the monic cofactor holding
    every irreducible factor of degree > 1.
    """
    if not p:
        raise ValueError("the zero polynomial has no finite root set")
    _, factors = p.factor_list()
    roots: list[tuple[Rat, int]] = []
    rest = R.one
    for factor, multiplicity in factors:
        if degree(factor) == 1:
            roots.append((-factor.get((0,), QQ.zero) / factor.get((1,), QQ.zero), multiplicity))
        else:
            rest = rest * factor.monic() ** multiplicity
    roots.sort(key=lambda item: item[0])
    return roots, rest


def shift(p: Poly, z: Rat | Fraction | int) -> Poly:
    """p(x + z)."""
    return p.compose(x, x + to_rat(z))


def affine(p: Poly, a: Rat | Fraction | int, b: Rat | Fraction | int) -> Poly:
    """p(a*x + b)."""
    return p.compose(x, to_rat(a) * x + to_rat(b))


def ratfunc(num: Poly, den: Poly | None = None) -> RatFunc:
    """Reduced rational function num/den."""
    if den is None:
        den = R.one
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    return K.new(num, den)


def ratfunc_parts(f: RatFunc) -> tuple[Poly, Poly]:
    """Numerator and denominator with the denominator made monic."""
    num, den = f.numer, f.denom
    lc = den.LC
    return num.quo_ground(lc), den.quo_ground(lc)


def rdiff(f: RatFunc) -> RatFunc:
    """Derivative of a rational function."""
    num, den = f.numer, f.denom
    return K.new(num.diff(x) * den - num * den.diff(x), den**2)


def log_derivative(p: Poly) -> RatFunc:
    """(ln p)' = p'/p for a nonzero polynomial."""
    if not p:
        raise ZeroDivisionError("logarithmic derivative of the zero polynomial")
    return K.new(p.diff(x), p)


def format_poly(p: Poly) -> str:
    """Human-readable text such as "x**2 + 1/2"."""
    return str(p.as_expr()) if p else "0"
