"""Exact rational algebra: polynomials, Wronskians and differential operators."""

from .diffops import (
    DiffOp,
    diffop_coefficients,
    diffop_compose,
    diffop_conjugate_by_logderiv,
    diffop_formal_conjugate,
    diffop_from_kernel,
    first_order,
    identity,
)
from .polys import (
    K,
    Poly,
    R,
    Rat,
    RatFunc,
    X,
    affine,
    coeffs_of,
    degree,
    exact_quotient,
    format_fraction,
    format_poly,
    linear_factor,
    log_derivative,
    monic,
    parse_fraction,
    poly_from_coeffs,
    poly_nth_root,
    product,
    rational_roots,
    ratfunc,
    ratfunc_parts,
    rdiff,
    shift,
    to_fraction,
    to_rat,
    x,
)
from .wronskian import rref_rational, wronskian, wronskian_minors

__all__ = [
    "DiffOp",
    "K",
    "Poly",
    "R",
    "Rat",
    "RatFunc",
    "X",
    "affine",
    "coeffs_of",
    "degree",
    "diffop_coefficients",
    "diffop_compose",
    "diffop_conjugate_by_logderiv",
    "diffop_formal_conjugate",
    "diffop_from_kernel",
    "exact_quotient",
    "first_order",
    "format_fraction",
    "format_poly",
    "identity",
    "linear_factor",
    "log_derivative",
    "monic",
    "parse_fraction",
    "poly_from_coeffs",
    "poly_nth_root",
    "product",
    "rational_roots",
    "ratfunc",
    "ratfunc_parts",
    "rdiff",
    "rref_rational",
    "shift",
    "to_fraction",
    "to_rat",
    "wronskian",
    "wronskian_minors",
    "x",
]
