"""
Successor algorithm over components.

Components of a fixed size are generated by repeatedly merging windows of
adjacent trees that start at a trivial tree. merges(C) keeps only the
canonical merges whose component-unmerge is C, which makes the merge
relation a tree rooted at the cycle; the successor walks that tree in
preorder.
"""

from bisect import bisect_right
from collections.abc import Iterator
from dataclasses import dataclass
from dataclasses import field
from enum import Enum

from ..config import settings
from ..core import InvalidCodeError
from ..trees import TRIVIAL
from ..trees import merge_window
from .code import ComponentCode
from .code import component_size
from .code import cunmerge
from .code import cycle
from .code import is_canonical
from .code import is_cycle


class SuccessorKind(str, Enum):
    """Whether a successor stayed at the same size or moved to the next one."""

    SAME_SIZE = "same_size"
    GREW_TO = "grew_to"


@dataclass(frozen=True)
class ComponentSuccessor:
    """Result of successor_component()."""

    kind: SuccessorKind
    component: ComponentCode
    # number of step-2 iterations (cunmerge computations) spent
    remerges: int = field(default=0, compare=False)

    @property
    def same_size(self) -> bool:
        return self.kind is SuccessorKind.SAME_SIZE


def merges(c: ComponentCode) -> list[ComponentCode]:
    """
    All canonical one-window merges of c whose cunmerge is c.

    Windows are T_l..T_r with l < r, T_l trivial and the window
    nondecreasing; a window that stops being nondecreasing cannot become
    so again by growing, so the inner scan stops there.

    Returns:
        The merges, deduplicated and sorted in increasing order
    """
    k = len(c)
    found: set[ComponentCode] = set()
    for left in range(k):
        if c[left] != TRIVIAL:
            continue
        for right in range(left + 1, k):
            if c[right] < c[right - 1]:
                break
            candidate = c[:left] + (merge_window(c[left : right + 1]),) + c[right + 1 :]
            if is_canonical(candidate) and cunmerge(candidate) == c:
                found.add(candidate)
    return sorted(found)


def successor_component(c: ComponentCode) -> ComponentSuccessor:
    """
    Successor of a component in generation order.

    1. If merges(c) is nonempty, return its minimum.
    2. Otherwise walk up through U = cunmerge(C) and return the least
       M in merges(U) with M > C at the first level where one exists.
    3. If the walk reaches the cycle, the size is exhausted: return the
       cycle over one more vertex.

    Raises:
        InvalidCodeError: If settings.DEBUG is on and c is not canonical
    """
    if settings.DEBUG and not is_canonical(c):
        raise InvalidCodeError(f"successor_component needs a canonical component, got {c}")

    candidates = merges(c)
    if candidates:
        return ComponentSuccessor(SuccessorKind.SAME_SIZE, candidates[0])

    current = c
    remerges = 0
    while not is_cycle(current):
        parent = cunmerge(current)
        remerges += 1
        candidates = merges(parent)
        above = bisect_right(candidates, current)
        if above < len(candidates):
            return ComponentSuccessor(SuccessorKind.SAME_SIZE, candidates[above], remerges)
        current = parent

    return ComponentSuccessor(SuccessorKind.GREW_TO, cycle(component_size(c) + 1), remerges)


def generate_components(n: int, start: ComponentCode | None = None) -> Iterator[ComponentCode]:
    """
    Stream all components over n vertices in generation order.

    Args:
        n: Number of vertices
        start: Resume after this component instead of starting at cycle(n)

    Yields:
        Canonical component codes, each exactly once
    """
    if start is None:
        current = cycle(n)
        yield current
    else:
        current = start
    while True:
        successor = successor_component(current)
        if not successor.same_size:
            return
        current = successor.component
        yield current


def generate_all_components(start_size: int = 1) -> Iterator[ComponentCode]:
    """Stream components of every size from start_size upwards, without end."""
    current = cycle(start_size)
    while True:
        yield current
        current = successor_component(current).component
