"""Spaces of polynomials as points of Gr(N,d) and sGr(N,d)."""

from .duality import (
    DualSpace,
    TPolynomials,
    associated_T,
    divided_wronskian,
    dual_data,
    dual_space,
    dual_space_full,
    verified_stratum_data,
)
from .exponents import (
    INFINITY,
    BasePoints,
    EvaluatedStratumData,
    Point,
    auto_stratum_data,
    base_points,
    exponents_at,
    finite_exponents,
    format_point,
    infinite_exponents,
    parse_point,
    parse_stratum_data,
    partition_from_exponents,
    stratum_membership,
    wronskian_of_space,
)
from .operators import (
    build_DX_factorized,
    dual_operator_identity_check,
    fundamental_operator,
    half_conjugate,
    miura_potential,
    miura_scalar_operator,
    y_from_basis,
)
from .selfdual import SelfDualResult, SelfDuality, selfdual_check
from .space import PolySpace, full_space, same_span
from .squaring import affine_substitute, reduced_wronskian, shift_by_roots, squaring_map

__all__ = [
    "INFINITY",
    "BasePoints",
    "DualSpace",
    "EvaluatedStratumData",
    "Point",
    "PolySpace",
    "SelfDualResult",
    "SelfDuality",
    "TPolynomials",
    "affine_substitute",
    "associated_T",
    "auto_stratum_data",
    "base_points",
    "build_DX_factorized",
    "divided_wronskian",
    "dual_data",
    "dual_operator_identity_check",
    "dual_space",
    "dual_space_full",
    "exponents_at",
    "finite_exponents",
    "format_point",
    "full_space",
    "fundamental_operator",
    "half_conjugate",
    "infinite_exponents",
    "miura_potential",
    "miura_scalar_operator",
    "parse_point",
    "parse_stratum_data",
    "partition_from_exponents",
    "reduced_wronskian",
    "same_span",
    "selfdual_check",
    "shift_by_roots",
    "squaring_map",
    "stratum_membership",
    "wronskian_of_space",
    "verified_stratum_data",
    "y_from_basis",
]
