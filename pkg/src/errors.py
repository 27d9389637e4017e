"""
Exception hierarchy shared by the library and the CLI.

Two families exist. UsageError subclasses describe inputs that are malformed
or outside the supported range; the CLI maps them to exit code 2.
MathematicalFailure subclasses describe well-formed inputs that fail a
mathematical requirement; the CLI maps them to exit code 3 and prints the
class name.
"""


class UsageError(ValueError):
    """Input rejected before any computation runs."""

    exit_code = 2


class OutOfRange(UsageError):
    """A numeric argument lies outside the admissible range."""


class RankMismatch(UsageError):
    """Weight rank or Lie type does not match the ambient N."""


class BudgetExceeded(UsageError):
    """Enumeration would exceed the configured N(d-N) budget."""


class OddN(UsageError):
    """A closed formula was requested that only exists for even N."""


class NotationError(UsageError):
    """Text notation (partitions, weights, rationals, points) failed to parse."""


class MathematicalFailure(Exception):
    """A well-formed input violates a mathematical requirement."""

    exit_code = 3


class NotAPower(MathematicalFailure):
    """Polynomial is not an exact n-th power over the rationals."""


class DependentBasis(MathematicalFailure):
    """Polynomials are linearly dependent (zero Wronskian)."""


class NotDivisible(MathematicalFailure):
    """An exact division required by a divided Wronskian failed."""


class MembershipFailed(MathematicalFailure):
    """The space is not a point of the stated Schubert cell intersection."""


class UnresolvedSingularity(MathematicalFailure):
    """The Wronskian has a root that is not rational; stratum data must be given."""
