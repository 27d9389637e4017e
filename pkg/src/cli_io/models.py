"""
JSON file formats of the command line.

Coefficients are listed from low to high degree. Each one is an integer or a
"p/q" string; floating point tokens are rejected.
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field, StrictInt, StrictStr, field_validator, model_validator

from ..errors import NotationError
from ..exact_algebra import (
    DiffOp,
    Poly,
    RatFunc,
    coeffs_of,
    diffop_coefficients,
    format_fraction,
    parse_fraction,
    ratfunc_parts,
)
from ..poly_spaces import PolySpace, SelfDualResult
from ..strata import PosetDag

Coefficient = StrictInt | StrictStr


def _exact(value: Coefficient) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    return parse_fraction(value)


def poly_to_json(p: Poly) -> list[str]:
    return [format_fraction(c) for c in coeffs_of(p)]


class SpaceFile(BaseModel):
    """An N-dimensional space of polynomials of degree < d."""

    N: int = Field(ge=1, description="Dimension of the space")
    d: int = Field(ge=1, description="Degree bound: every polynomial has degree < d")
    basis: list[list[Coefficient]] = Field(description="Coefficient lists, low degree first")

    @field_validator("basis")
    @classmethod
    def _coefficients_are_exact(cls, basis: list[list[Coefficient]]) -> list[list[Coefficient]]:
        for row in basis:
            for value in row:
                _exact(value)
        return basis

    @model_validator(mode="after")
    def _basis_has_N_members(self) -> "SpaceFile":
        if len(self.basis) != self.N:
            raise ValueError(f"N = {self.N} but the basis has {len(self.basis)} polynomials")
        return self

    def to_space(self) -> PolySpace:
        return PolySpace.from_coefficients([[_exact(c) for c in row] for row in self.basis], self.d)

    @classmethod
    def from_space(cls, X: PolySpace) -> "SpaceFile":
        return cls(N=X.N, d=X.d, basis=[poly_to_json(p) for p in X.basis])


def load_space(text: str) -> PolySpace:
    """
    Parse a SpaceFile and build its canonical PolySpace.

    Raises:
        NotationError: if the JSON does not describe a space file
    """
    try:
        space_file = SpaceFile.model_validate_json(text)
    except ValueError as e:
        raise NotationError(f"Invalid space file: {e}") from e
    return space_file.to_space()


class PosetNodeModel(BaseModel):
    label: str
    n: int
    dimension: int
    empty: bool = False


class PosetFile(BaseModel):
    family: Literal["A", "BC"]
    N: int
    d: int
    nodes: list[PosetNodeModel]
    edges: list[tuple[int, int]]
    dashed_edges: list[tuple[int, int]] = Field(default_factory=list)

    @classmethod
    def from_dag(cls, dag: PosetDag) -> "PosetFile":
        return cls(
            family=dag.family,
            N=dag.N,
            d=dag.d,
            nodes=[
                PosetNodeModel(label=str(node.label), n=node.label.n, dimension=node.dimension, empty=node.empty)
                for node in dag.nodes
            ],
            edges=[(e.parent, e.child) for e in dag.edges if not e.dashed],
            dashed_edges=[(e.parent, e.child) for e in dag.edges if e.dashed],
        )


class RationalFunctionModel(BaseModel):
    numerator: list[str]
    denominator: list[str]

    @classmethod
    def from_ratfunc(cls, f: RatFunc) -> "RationalFunctionModel":
        num, den = ratfunc_parts(f)
        return cls(numerator=poly_to_json(num), denominator=poly_to_json(den))


class OperatorReport(BaseModel):
    """d^N + h_1 d^(N-1) + ... + h_N as the list h_1..h_N."""

    order: int
    coefficients: list[RationalFunctionModel]

    @classmethod
    def from_diffop(cls, op: DiffOp) -> "OperatorReport":
        parts = diffop_coefficients(op)
        return cls(
            order=op.order,
            coefficients=[
                RationalFunctionModel(numerator=poly_to_json(num), denominator=poly_to_json(den)) for num, den in parts
            ],
        )


class SelfDualReport(BaseModel):
    status: Literal["not_self_dual", "self_dual", "pure"]
    g: list[str] | None = None

    @classmethod
    def from_result(cls, result: SelfDualResult) -> "SelfDualReport":
        return cls(status=result.status.value, g=None if result.g is None else poly_to_json(result.g))


class ExponentsReport(BaseModel):
    point: str
    exponents: list[int]
    partition: str


class MiuraReport(BaseModel):
    potential: RationalFunctionModel
    operator: OperatorReport
    matches_fundamental_operator: bool
