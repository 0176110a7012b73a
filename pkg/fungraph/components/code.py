"""
Component codes.

A component is a limit cycle whose vertices root in-trees; its code is
the lexicographically minimal rotation of the tree codes read along the
cycle. Rotations are compared on the flattening
<0> T1 <0> T2 ... <0> Tk, whose minimal rotation always starts at a
separator and corresponds to the minimal rotation of the tree sequence.
"""

from collections.abc import Sequence

from ..config import settings
from ..core import InvalidCodeError
from ..core import Ordering
from ..core import compare
from ..trees import TRIVIAL
from ..trees import TreeCode
from ..trees import is_valid_tree_code
from ..trees import unmerge

ComponentCode = tuple[TreeCode, ...]


def cycle(n: int) -> ComponentCode:
    """
    The cycle of length n, the first component over n vertices.

    Raises:
        InvalidCodeError: If n < 1
    """
    if n < 1:
        raise InvalidCodeError(f"a cycle needs at least one vertex, got {n}")
    return (TRIVIAL,) * n


def component_size(c: Sequence[TreeCode]) -> int:
    """Number of vertices of a component."""
    return sum(t[0] for t in c)


def is_cycle(c: Sequence[TreeCode]) -> bool:
    """True iff every tree of c is trivial."""
    return all(t[0] == 1 for t in c)


def flatten(trees: Sequence[TreeCode]) -> list[int]:
    """Concatenate the tree codes, each preceded by a 0 separator."""
    flat: list[int] = []
    for t in trees:
        flat.append(0)
        flat.extend(t)
    return flat


def least_rotation(seq: Sequence[int]) -> int:
    """
    Start index of the lexicographically least rotation of seq, in O(len(seq)).

    Two candidate starts i < j are compared character by character; on a
    mismatch after k equal characters the larger candidate cannot start a
    least rotation anywhere in its next k+1 positions, so it jumps past them.
    """
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = seq[(i + k) % n]
        b = seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def is_canonical(trees: Sequence[TreeCode]) -> bool:
    """True iff the tree sequence is its own minimal rotation."""
    if not trees:
        return False
    flat = flatten(trees)
    k = least_rotation(flat)
    return k == 0 or flat[k:] + flat[:k] == flat


def canonical_rotation(trees: Sequence[TreeCode]) -> ComponentCode:
    """Return the minimal rotation of a nonempty sequence of tree codes."""
    if not trees:
        raise InvalidCodeError("a component needs at least one tree")
    flat = flatten(trees)
    k = least_rotation(flat)
    # the least rotation starts at a separator; count separators before it
    shift = sum(1 for x in flat[:k] if x == 0)
    return tuple(trees[shift:]) + tuple(trees[:shift])


def compare_components(a: ComponentCode, b: ComponentCode) -> Ordering:
    """Lexicographic comparison of two component codes as tree sequences."""
    return compare(a, b)


def component_violation(trees: Sequence[Sequence[int]]) -> str | None:
    """
    Name the first violated component-code invariant, if any.

    Returns:
        A human-readable description, or None if trees is a canonical code
    """
    if not trees:
        return "component has no trees"
    for position, t in enumerate(trees, start=1):
        if not is_valid_tree_code(t):
            return f"tree {position} {list(t)} is not a valid tree code"
    if not is_canonical(tuple(tuple(t) for t in trees)):
        return "component is not its own lexicographically minimal rotation"
    return None


def cunmerge(c: ComponentCode) -> ComponentCode:
    """
    Component-unmerge: unmerge the leftmost nontrivial tree in place.

    The result is canonical and has strictly more trees than c.

    Raises:
        InvalidCodeError: If all trees of c are trivial
    """
    for h, t in enumerate(c):
        if t[0] > 1:
            result = c[:h] + unmerge(t) + c[h + 1 :]
            if settings.DEBUG and not is_canonical(result):
                raise AssertionError(f"cunmerge produced a non-canonical component {result}")
            return result
    raise InvalidCodeError("cannot cunmerge a cycle")
