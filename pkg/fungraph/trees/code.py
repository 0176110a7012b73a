"""
Tree isomorphism codes.

A tree code is the flat sequence <|T|> followed by the codes of the
immediate subtrees in nondecreasing lexicographic order. Every vertex
contributes exactly one entry (the size of the subtree it roots), so a
valid code has length equal to its first entry.
"""

from collections.abc import Iterator
from collections.abc import Sequence

from ..core import InvalidCodeError
from ..core import Ordering
from ..core import compare

TreeCode = tuple[int, ...]

TRIVIAL: TreeCode = (1,)


def is_valid_tree_code(s: Sequence[int]) -> bool:
    """
    Check whether a sequence of integers is a valid tree code.

    Each position is visited once as the child of its parent: the children
    of the vertex at position i must tile positions i+1 .. i+s[i]-1 exactly
    and appear in nondecreasing order.

    Args:
        s: Any finite sequence of integers

    Returns:
        True iff s is the code of some rooted unordered tree
    """
    n = len(s)
    if n == 0 or any(type(x) is not int or x < 1 for x in s):
        return False
    if s[0] != n:
        return False

    for i in range(n):
        end = i + s[i]
        if end > n:
            return False
        j = i + 1
        previous: Sequence[int] | None = None
        while j < end:
            child_end = j + s[j]
            if child_end > end:
                return False
            child = s[j:child_end]
            if previous is not None and tuple(child) < tuple(previous):
                return False
            previous = child
            j = child_end
    return True


def tree_size(t: TreeCode) -> int:
    """Number of vertices of a tree."""
    return t[0]


def compare_trees(a: TreeCode, b: TreeCode) -> Ordering:
    """Lexicographic comparison of two tree codes."""
    return compare(a, b)


def subtrees(t: TreeCode) -> Iterator[TreeCode]:
    """Yield the immediate subtree codes of t in stored order."""
    j = 1
    while j < len(t):
        yield t[j : j + t[j]]
        j += t[j]


def merge(ts: Sequence[TreeCode]) -> TreeCode:
    """
    Attach ts[1:] as immediate subtrees of the trivial tree ts[0].

    Args:
        ts: At least two trees, the first trivial, in nondecreasing order

    Returns:
        The merged tree code

    Raises:
        InvalidCodeError: If the window does not satisfy the preconditions
    """
    if len(ts) < 2:
        raise InvalidCodeError("merge needs at least two trees")
    if ts[0] != TRIVIAL:
        raise InvalidCodeError(f"merge needs a trivial first tree, got {list(ts[0])}")
    for left, right in zip(ts, ts[1:], strict=False):
        if right < left:
            raise InvalidCodeError("merge needs a lexicographically nondecreasing window")
    return merge_window(ts)


def merge_window(ts: Sequence[TreeCode]) -> TreeCode:
    """merge() without precondition checks, for callers that already hold them."""
    size = sum(t[0] for t in ts)
    merged = [size]
    for t in ts[1:]:
        merged.extend(t)
    return tuple(merged)


def unmerge(t: TreeCode) -> tuple[TreeCode, ...]:
    """
    Detach the immediate subtrees of t and put them after its former root.

    Raises:
        InvalidCodeError: If t is the trivial tree
    """
    if len(t) < 2:
        raise InvalidCodeError("cannot unmerge the trivial tree")
    return (TRIVIAL, *subtrees(t))
