"""
Partitions Brick

PUBLIC CONTRACT:
- Partition: Nondecreasing sequence of positive integers
- first_partition(): (1, ..., 1)
- next_partition_same_n(): Lexicographic successor among partitions of the same integer
- successor_partition(): Successor that wraps to the first partition of n+1

RESPONSIBILITIES:
- Successor generation for integer partitions in ascending form
"""

from .successor import Partition
from .successor import first_partition
from .successor import next_partition_same_n
from .successor import successor_partition

__all__ = ["Partition", "first_partition", "next_partition_same_n", "successor_partition"]
