"""Serialization for the command line: JSON models, DOT output and label notation."""

from .dot import poset_to_dot
from .models import (
    ExponentsReport,
    MiuraReport,
    OperatorReport,
    PosetFile,
    PosetNodeModel,
    RationalFunctionModel,
    SelfDualReport,
    SpaceFile,
    load_space,
    poly_to_json,
)
from .notation import parse_label, parse_pair

__all__ = [
    "ExponentsReport",
    "MiuraReport",
    "OperatorReport",
    "PosetFile",
    "PosetNodeModel",
    "RationalFunctionModel",
    "SelfDualReport",
    "SpaceFile",
    "load_space",
    "parse_label",
    "parse_pair",
    "poly_to_json",
    "poset_to_dot",
]
