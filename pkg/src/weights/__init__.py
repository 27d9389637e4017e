"""Partitions, dominant weights of g_N and root systems of types A, B, C."""

from .partitions import (
    Partition,
    box_partitions,
    complement_bar,
    dual_tilde,
    is_N_symmetric,
    parse_partition,
    partition_size,
)
from .root_system import LIE_TYPES, RootSystem, Weight, root_system, root_system_for_N, weyl_dim
from .weights import (
    DominantWeight,
    assoc_partition,
    assoc_size,
    lift_symmetric,
    parse_weight,
    parse_weight_list,
    weights_of,
)

__all__ = [
    "LIE_TYPES",
    "DominantWeight",
    "Partition",
    "RootSystem",
    "Weight",
    "assoc_partition",
    "assoc_size",
    "box_partitions",
    "complement_bar",
    "dual_tilde",
    "is_N_symmetric",
    "lift_symmetric",
    "parse_partition",
    "parse_weight",
    "parse_weight_list",
    "partition_size",
    "root_system",
    "root_system_for_N",
    "weights_of",
    "weyl_dim",
]
