"""
Monic linear differential operators with coefficients in QQ(x).

A DiffOp of order N stores h_1..h_N of the normal form
    d^N + h_1 d^(N-1) + ... + h_N.
Intermediate (not necessarily monic) operators are lists c_0..c_N with c_j
multiplying d^j; every public result is brought back to the monic normal form.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Sequence

from ..errors import DependentBasis
from .polys import K, Poly, RatFunc, format_poly, ratfunc, ratfunc_parts, rdiff
from .wronskian import wronskian_minors

logger = logging.getLogger(__name__)

_Dense = list[RatFunc]


@dataclass(frozen=True)
class DiffOp:
    coeffs: tuple[RatFunc, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp) or other.order != self.order:
            return NotImplemented if not isinstance(other, DiffOp) else False
        return all(not (a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.order, tuple(ratfunc_parts(c) for c in self.coeffs)))

    def __str__(self) -> str:
        terms = [f"d^{self.order}" if self.order != 1 else "d"]
        for i, h in enumerate(self.coeffs, start=1):
            if not h:
                continue
            power = self.order - i
            num, den = ratfunc_parts(h)
            text = format_poly(num) if den == 1 else f"({format_poly(num)})/({format_poly(den)})"
            terms.append(f"({text})" + (f"*d^{power}" if power > 1 else "*d" if power == 1 else ""))
        return " + ".join(terms)

    def apply(self, f: Poly) -> RatFunc:
        """D f as a rational function."""
        value = K(f)
        derivative = value
        total = K.zero
        dense = _dense(self)
        for j in range(self.order + 1):
            total += dense[j] * derivative
            derivative = rdiff(derivative)
        return total


def identity(order: int = 0) -> DiffOp:
    """The operator d^order."""
    return DiffOp(tuple(K.zero for _ in range(order)))


def first_order(a: RatFunc) -> DiffOp:
    """d + a."""
    return DiffOp((a,))


def _dense(op: DiffOp) -> _Dense:
    n = op.order
    return [op.coeffs[n - 1 - j] for j in range(n)] + [K.one]


def _from_dense(dense: _Dense) -> DiffOp:
    n = len(dense) - 1
    lead = dense[n]
    if not lead:
        raise ValueError("leading coefficient vanished")
    if lead != K.one:
        dense = [c / lead for c in dense]
    return DiffOp(tuple(dense[n - i] for i in range(1, n + 1)))


def _dense_mul(left: _Dense, right: _Dense) -> _Dense:
    """(sum a_i d^i)(sum b_j d^j) via d^i b = sum_k C(i,k) b^(k) d^(i-k)."""
    result = [K.zero] * (len(left) + len(right) - 1)
    max_i = len(left) - 1
    derivatives = []
    for b in right:
        chain = [b]
        for _ in range(max_i):
            chain.append(rdiff(chain[-1]))
        derivatives.append(chain)
    for i, a in enumerate(left):
        if not a:
            continue
        for j in range(len(right)):
            for k in range(i + 1):
                term = derivatives[j][k]
                if term:
                    result[i + j - k] += a * comb(i, k) * term
    return result


def diffop_compose(factors: Sequence[DiffOp]) -> DiffOp:
    """Product of operators taken left to right, in normal form."""
    dense: _Dense = [K.one]
    for factor in factors:
        dense = _dense_mul(dense, _dense(factor))
    return _from_dense(dense)


def diffop_from_kernel(basis: Sequence[Poly]) -> DiffOp:
    """
    Monic operator of order N whose kernel is spanned by basis.

    h_i = (-1)^i M_(N-i) / Wr(basis), with M_j the Wronskian minors.
    """
    n = len(basis)
    minors = wronskian_minors(basis)
    wr = minors[n]
    if not wr:
        raise DependentBasis("basis has zero Wronskian")
    return DiffOp(tuple(ratfunc((-1) ** i * minors[n - i], wr) for i in range(1, n + 1)))


def diffop_formal_conjugate(op: DiffOp) -> DiffOp:
    """d^N + sum (-1)^i d^(N-i) h_i, expanded back to normal form."""
    n = op.order
    dense = [K.zero] * n + [K.one]
    for i, h in enumerate(op.coeffs, start=1):
        if not h:
            continue
        expanded = _dense_mul([K.zero] * (n - i) + [K.one], [h])
        sign = -1 if i % 2 else 1
        for j, c in enumerate(expanded):
            dense[j] += sign * c
    return _from_dense(dense)


def diffop_conjugate_by_logderiv(op: DiffOp, psi: RatFunc) -> DiffOp:
    """g D g^(-1) with psi = (ln g)', obtained by substituting d -> d - psi."""
    shifted = [-psi, K.one]
    power: _Dense = [K.one]
    result = [K.zero] * (op.order + 1)
    for j, c in enumerate(_dense(op)):
        if c:
            for k, term in enumerate(power):
                result[k] += c * term
        power = _dense_mul(power, shifted)
    return _from_dense(result)


def diffop_coefficients(op: DiffOp) -> list[tuple[Poly, Poly]]:
    """(numerator, monic denominator) of every h_i."""
    return [ratfunc_parts(h) for h in op.coeffs]
