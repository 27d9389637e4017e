"""Weight multiplicities, tensor decompositions and invariant dimensions."""

from .freudenthal import weight_multiplicities, weight_set
from .invariants import (
    fold_decompose,
    gl_tensor_decompose,
    hom_multiplicity,
    hom_multiplicity_A,
    invariant_dim_A,
    invariant_dim_BC,
    pair_invariant_A,
    partition_from_dynkin,
)
from .lr import lr_coefficient
from .racah_speiser import tensor_decompose, tensor_with

__all__ = [
    "fold_decompose",
    "gl_tensor_decompose",
    "hom_multiplicity",
    "hom_multiplicity_A",
    "invariant_dim_A",
    "invariant_dim_BC",
    "lr_coefficient",
    "pair_invariant_A",
    "partition_from_dynkin",
    "tensor_decompose",
    "tensor_with",
    "weight_multiplicities",
    "weight_set",
]
