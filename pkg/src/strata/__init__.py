"""Stratum labels, degeneration posets and Wronski-map degrees."""

from .degenerations import (
    merge_candidates_A,
    merge_candidates_BC,
    simple_degenerations,
    simple_degenerations_A,
    simple_degenerations_BC,
)
from .degrees import (
    covering_degree,
    preimage_fibers,
    reduced_wronski_degree,
    symmetry_coefficient,
    top_strata_BC,
    wronski_degree_A,
    wronski_degree_BC,
)
from .enumerate import enumerate_strata, enumerate_strata_A, enumerate_strata_BC
from .labels import SPair, SStratumLabel, StratumLabel, StratumLabelA, sort_labels
from .poset import PosetDag, PosetEdge, PosetNode, build_poset, closure, order_leq, unreachable_pairs

__all__ = [
    "PosetDag",
    "PosetEdge",
    "PosetNode",
    "SPair",
    "SStratumLabel",
    "StratumLabel",
    "StratumLabelA",
    "build_poset",
    "closure",
    "covering_degree",
    "enumerate_strata",
    "enumerate_strata_A",
    "enumerate_strata_BC",
    "merge_candidates_A",
    "merge_candidates_BC",
    "order_leq",
    "preimage_fibers",
    "reduced_wronski_degree",
    "simple_degenerations",
    "simple_degenerations_A",
    "simple_degenerations_BC",
    "sort_labels",
    "symmetry_coefficient",
    "top_strata_BC",
    "unreachable_pairs",
    "wronski_degree_A",
    "wronski_degree_BC",
]
