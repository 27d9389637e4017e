import os

from .errors import BudgetExceeded, OutOfRange
from .weights import LIE_TYPES, RootSystem, root_system, root_system_for_N

# Stratification family to the Lie algebra acting on it
FAMILY_MAPPING = {
    "A": "gl_N on Gr(N,d)",
    "BC": "g_N on sGr(N,d)",
}

_FAMILY_ALIASES = {
    "gl": "A",
    "gr": "A",
    "b/c": "BC",
    "sgr": "BC",
    "selfdual": "BC",
}

# Default family
DEFAULT_FAMILY = "A"

# List of available family names for CLI choices
AVAILABLE_FAMILIES = list(FAMILY_MAPPING.keys())

# Enumeration budget on the number of cells N(d-N)
DEFAULT_MAX_CELLS = 12
MAX_CELLS_ENV = "GRSTRAT_MAX_CELLS"

__all__ = [
    "AVAILABLE_FAMILIES",
    "DEFAULT_FAMILY",
    "DEFAULT_MAX_CELLS",
    "FAMILY_MAPPING",
    "LIE_TYPES",
    "MAX_CELLS_ENV",
    "check_budget",
    "get_family",
    "get_lie_type",
    "get_max_cells",
    "root_system_for_N",
]


def _normalize_family_name(name: str) -> str:
    """
    Normalize a family name to its canonical key ("A" or "BC").
    Strips whitespace and upper-cases; a few descriptive aliases are accepted.

    Args:
        name: The family name to normalize (e.g., "bc", " A ", "sGr")

    Returns:
        Normalized family name
    """
    normalized = name.strip()
    return _FAMILY_ALIASES.get(normalized.lower(), normalized.upper())


def get_family(name: str) -> str:
    """
    Get the canonical family key for a family name.

    Args:
        name: The family name in any supported format

    Returns:
        "A" or "BC"

    Raises:
        ValueError: If the family name is not found
    """
    if name in FAMILY_MAPPING:
        return name

    normalized_input = _normalize_family_name(name)
    if normalized_input in FAMILY_MAPPING:
        return normalized_input

    available = ", ".join(AVAILABLE_FAMILIES)
    raise ValueError(f"Unknown family: {name}. Available families: {available}")


def get_lie_type(name: str, rank: int) -> RootSystem:
    """
    Get the root system for a Lie type letter and rank.

    Raises:
        ValueError: If the type letter is not one of A, B, C
        OutOfRange: If the rank is not positive
    """
    letter = name.strip().upper()
    if letter not in LIE_TYPES:
        available = ", ".join(LIE_TYPES)
        raise ValueError(f"Unknown Lie type: {name}. Available types: {available}")
    if rank < 1:
        raise OutOfRange(f"Rank must be positive, got {rank}")
    return root_system(letter, rank)


def get_max_cells(override: int | None = None) -> int:
    """
    Resolve the enumeration budget: explicit override, then the
    GRSTRAT_MAX_CELLS environment variable, then the default.

    Raises:
        OutOfRange: If the resolved value is not a positive integer
    """
    if override is not None:
        value = override
    else:
        raw = os.getenv(MAX_CELLS_ENV)
        if raw is None or not raw.strip():
            return DEFAULT_MAX_CELLS
        try:
            value = int(raw)
        except ValueError as e:
            raise OutOfRange(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}") from e
    if value < 1:
        raise OutOfRange(f"Budget must be positive, got {value}")
    return value


def check_budget(N: int, d: int, max_cells: int | None = None) -> None:
    """Validate 1 <= N <= d and N(d-N) against the budget."""
    if not 1 <= N <= d:
        raise OutOfRange(f"Need 1 <= N <= d, got N={N}, d={d}")
    budget = get_max_cells(max_cells)
    if N * (d - N) > budget:
        raise BudgetExceeded(f"N(d-N) = {N * (d - N)} exceeds the budget of {budget} cells")
