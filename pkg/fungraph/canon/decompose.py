"""
Decomposition of an endofunction into connected components.

Every component of a functional digraph holds exactly one cycle. Each
vertex is followed until the walk reaches a vertex already seen: an
in-progress vertex closes a new cycle, a resolved one joins the walk to
an existing component. Every vertex is walked once, so this is linear.
"""

from collections.abc import Sequence
from enum import IntEnum
from typing import NamedTuple

from ..core import InvalidTableError

FunctionTable = tuple[int, ...]


class _Visit(IntEnum):
    UNVISITED = 0
    IN_PROGRESS = 1
    RESOLVED = 2


class ComponentParts(NamedTuple):
    """One connected component: its cycle and the in-trees hanging from it."""

    # cycle vertices in arc order: cycle[i] -> cycle[i + 1]
    cycle: tuple[int, ...]
    # transient predecessors of every vertex of the component that has any
    predecessors: dict[int, list[int]]


def validate_table(table: Sequence[int]) -> FunctionTable:
    """
    Check that every entry of a table lies in {0, ..., n-1}.

    Raises:
        InvalidTableError: On the first out-of-range or non-integer entry
    """
    n = len(table)
    for i, value in enumerate(table):
        if type(value) is not int or not 0 <= value < n:
            raise InvalidTableError(f"entry {i} is {value!r}, expected an integer in 0..{n - 1}")
    return tuple(table)


def decompose(table: FunctionTable) -> list[ComponentParts]:
    """
    Split a function table into its connected components.

    Returns:
        Components in order of their smallest vertex
    """
    n = len(table)
    state = [_Visit.UNVISITED] * n
    owner = [-1] * n
    cycles: list[tuple[int, ...]] = []

    for v in range(n):
        if state[v] is not _Visit.UNVISITED:
            continue
        path: list[int] = []
        u = v
        while state[u] is _Visit.UNVISITED:
            state[u] = _Visit.IN_PROGRESS
            path.append(u)
            u = table[u]
        if state[u] is _Visit.IN_PROGRESS:
            component = len(cycles)
            cycles.append(tuple(path[path.index(u) :]))
        else:
            component = owner[u]
        for w in path:
            state[w] = _Visit.RESOLVED
            owner[w] = component

    on_cycle = [False] * n
    for cyc in cycles:
        for v in cyc:
            on_cycle[v] = True

    parts = [ComponentParts(cyc, {}) for cyc in cycles]
    for w in range(n):
        if not on_cycle[w]:
            parts[owner[w]].predecessors.setdefault(table[w], []).append(w)
    return parts
