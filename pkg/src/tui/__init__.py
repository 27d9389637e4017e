"""Terminal display helpers for rich formatting."""

from .display import console, poset_counts, print_stratification, stratum_rows

__all__ = [
    "console",
    "poset_counts",
    "print_stratification",
    "stratum_rows",
]
