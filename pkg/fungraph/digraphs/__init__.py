"""
Digraphs Brick

PUBLIC CONTRACT:
- DigraphCode: Canonical code of an arbitrary functional digraph
- EMPTY_DIGRAPH: The digraph with no vertices
- partition_of(), digraph_size(): Inspection
- generation_rank(), compare_by_generation(): Generation order of components
- compare_digraphs(), digraph_violation(): Order and validation
- successor_digraph(), generate_digraphs(), generate_all_digraphs(): Generation

RESPONSIBILITIES:
- Canonical codes of arbitrary functional digraphs
- The total order on digraphs induced by partitions and component generation order
- The successor algorithm over digraphs and its streams
"""

from .code import EMPTY_DIGRAPH
from .code import DigraphCode
from .code import compare_by_generation
from .code import compare_digraphs
from .code import digraph_size
from .code import digraph_violation
from .code import generation_rank
from .code import partition_of
from .generator import generate_all_digraphs
from .generator import generate_digraphs
from .generator import successor_digraph

__all__ = [
    "DigraphCode",
    "EMPTY_DIGRAPH",
    "partition_of",
    "digraph_size",
    "generation_rank",
    "compare_by_generation",
    "compare_digraphs",
    "digraph_violation",
    "successor_digraph",
    "generate_digraphs",
    "generate_all_digraphs",
]
