"""
Three-way comparison results.

Codes are tuples, so Python's tuple order already is the lexicographic
order with a proper prefix before its extensions.
"""

from enum import IntEnum
from typing import Any


class Ordering(IntEnum):
    """Result of a three-way comparison."""

    LT = -1
    EQ = 0
    GT = 1


def compare(a: Any, b: Any) -> Ordering:
    """Compare two mutually ordered values."""
    return Ordering((a > b) - (a < b))
