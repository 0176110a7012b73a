"""
Digraph codes and their order.

A digraph code lists the component codes by nondecreasing size and,
among equal sizes, in nondecreasing generation order. There is no known
direct characterisation of generation order between two components of
the same size, so it is decided by rank in the replayed stream; the
rank tables are built once per size and only consulted when two
distinct components of equal size meet.
"""

from functools import lru_cache

import structlog

from ..components import ComponentCode
from ..components import component_size
from ..components import component_violation
from ..components import generate_components
from ..core import InvalidCodeError
from ..core import Ordering
from ..core import compare
from ..partitions import Partition

logger = structlog.get_logger(__name__)

DigraphCode = tuple[ComponentCode, ...]

EMPTY_DIGRAPH: DigraphCode = ()


def partition_of(g: DigraphCode) -> Partition:
    """The partition spelled by the component sizes of g."""
    return tuple(component_size(c) for c in g)


def digraph_size(g: DigraphCode) -> int:
    """Number of vertices of a digraph."""
    return sum(component_size(c) for c in g)


@lru_cache(maxsize=None)
def _rank_table(n: int) -> dict[ComponentCode, int]:
    table = {c: index for index, c in enumerate(generate_components(n))}
    logger.info("Built generation rank table", size=n, components=len(table))
    return table


def generation_rank(c: ComponentCode) -> int:
    """
    0-based index of c in generate_components(|c|).

    Raises:
        InvalidCodeError: If c is not a canonical component code
    """
    violation = component_violation(c)
    if violation is not None:
        raise InvalidCodeError(violation)
    return _rank_table(component_size(c))[c]


def compare_by_generation(a: ComponentCode, b: ComponentCode) -> Ordering:
    """Compare two components by size, then by generation order."""
    by_size = compare(component_size(a), component_size(b))
    if by_size is not Ordering.EQ or a == b:
        return by_size
    return compare(generation_rank(a), generation_rank(b))


def compare_digraphs(a: DigraphCode, b: DigraphCode) -> Ordering:
    """
    Compare two digraphs in generation order.

    Partitions are compared first (fewer vertices first, then
    lexicographically); equal partitions fall back to a lexicographic
    comparison of the component sequences under generation order.
    """
    pa, pb = partition_of(a), partition_of(b)
    by_partition = compare((sum(pa), pa), (sum(pb), pb))
    if by_partition is not Ordering.EQ:
        return by_partition
    for ca, cb in zip(a, b, strict=True):
        if ca != cb:
            return compare_by_generation(ca, cb)
    return Ordering.EQ


def digraph_violation(g: DigraphCode) -> str | None:
    """
    Name the first violated digraph-code invariant, if any.

    Returns:
        A human-readable description, or None if g is a canonical code
    """
    for position, c in enumerate(g, start=1):
        violation = component_violation(c)
        if violation is not None:
            return f"component {position}: {violation}"
    for position in range(1, len(g)):
        left, right = g[position - 1], g[position]
        if component_size(right) < component_size(left):
            return f"component {position + 1} is smaller than component {position}"
        if compare_by_generation(left, right) is Ordering.GT:
            return f"component {position + 1} precedes component {position} in generation order"
    return None
