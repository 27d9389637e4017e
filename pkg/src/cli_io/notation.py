"""
Text notation for stratum labels.

Members are separated by ";". Type A members are partitions ("2,0;1,0;1,0").
Types B/C members are dominant weights with an optional "_k" suffix
("1,0_1;0,0").
"""

from ..errors import NotationError
from ..strata import SPair, SStratumLabel, StratumLabel, StratumLabelA
from ..weights import parse_partition, parse_weight, root_system_for_N


def _members(text: str) -> list[str]:
    items = [item.strip() for item in text.strip().strip("()").split(";") if item.strip()]
    if not items:
        raise NotationError(f"Empty label: {text!r}")
    return items


def parse_pair(text: str, N: int) -> SPair:
    weight, sep, k = text.partition("_")
    try:
        shift = int(k) if sep else 0
    except ValueError as e:
        raise NotationError(f"Not a (weight, k) pair: {text!r}") from e
    if shift < 0:
        raise NotationError(f"k must be nonnegative in {text!r}")
    return SPair(parse_weight(weight, root_system_for_N(N)), shift)


def parse_label(text: str, N: int, d: int, family: str) -> StratumLabel:
    """Read a label of the given family."""
    members = _members(text)
    if family == "A":
        return StratumLabelA.of(N, d, [parse_partition(item, N) for item in members])
    return SStratumLabel.of(N, d, [parse_pair(item, N) for item in members])
