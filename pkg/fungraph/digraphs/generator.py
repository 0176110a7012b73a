"""
Successor algorithm over arbitrary functional digraphs.

The rightmost component that still has a same-size successor is advanced
and every later component is reset to the first component of its size,
or to a copy of the advanced one when sizes match. When no component can
advance, the partition advances and every component restarts as a cycle.
"""

from collections.abc import Iterator

from ..components import component_size
from ..components import cycle
from ..components import successor_component
from ..core import InvalidCodeError
from ..partitions import first_partition
from ..partitions import successor_partition
from .code import EMPTY_DIGRAPH
from .code import DigraphCode
from .code import digraph_size
from .code import partition_of


def successor_digraph(g: DigraphCode) -> DigraphCode:
    """Immediate successor of a canonical digraph in generation order."""
    for h in reversed(range(len(g))):
        successor = successor_component(g[h])
        if not successor.same_size:
            continue
        advanced = successor.component
        size = component_size(advanced)
        tail = tuple(advanced if component_size(c) == size else cycle(component_size(c)) for c in g[h + 1 :])
        return g[:h] + (advanced,) + tail

    return tuple(cycle(part) for part in successor_partition(partition_of(g)))


def generate_digraphs(n: int, start: DigraphCode | None = None) -> Iterator[DigraphCode]:
    """
    Stream all functional digraphs over n vertices in generation order.

    Args:
        n: Number of vertices
        start: Resume after this digraph instead of starting at n self-loops

    Yields:
        Canonical digraph codes, each exactly once
    """
    if n < 1:
        raise InvalidCodeError(f"a digraph stream needs at least one vertex, got {n}")
    if start is None:
        current = tuple(cycle(part) for part in first_partition(n))
        yield current
    else:
        current = start
    while True:
        current = successor_digraph(current)
        if digraph_size(current) != n:
            return
        yield current


def generate_all_digraphs() -> Iterator[DigraphCode]:
    """Stream every functional digraph, starting from the empty one, without end."""
    current = EMPTY_DIGRAPH
    while True:
        current = successor_digraph(current)
        yield current
