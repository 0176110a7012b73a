"""
Canonical codes of function tables.

Tree codes are computed bottom-up by sorting child codes, component
codes are minimal rotations of the tree codes read along the cycle, and
components are ordered by size and then by generation order.
"""

from collections.abc import Mapping
from collections.abc import Sequence
from functools import cmp_to_key

from ..components import ComponentCode
from ..components import canonical_rotation
from ..digraphs import DigraphCode
from ..digraphs import compare_by_generation
from ..trees import TreeCode
from .decompose import decompose
from .decompose import validate_table


def tree_code_of(root: int, predecessors: Mapping[int, Sequence[int]]) -> TreeCode:
    """
    Code of the in-tree rooted at root.

    Args:
        root: A cycle vertex (or any vertex whose subtree is wanted)
        predecessors: Transient predecessors of each vertex, as built by decompose()
    """
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in predecessors.get(v, ()):
            order.append(u)
            stack.append(u)

    codes: dict[int, TreeCode] = {}
    for v in reversed(order):
        children = sorted(codes.pop(u) for u in predecessors.get(v, ()))
        code = [1 + sum(child[0] for child in children)]
        for child in children:
            code.extend(child)
        codes[v] = tuple(code)
    return codes[root]


def component_code_of(trees: Sequence[TreeCode]) -> ComponentCode:
    """Canonical code of the trees listed in arc order along a cycle."""
    return canonical_rotation(trees)


def canonicalize(table: Sequence[int]) -> DigraphCode:
    """
    Canonical digraph code of a function table.

    Two tables receive equal codes iff their digraphs are isomorphic.

    Raises:
        InvalidTableError: If an entry is out of range
    """
    table = validate_table(table)
    components = [
        component_code_of([tree_code_of(root, parts.predecessors) for root in parts.cycle])
        for parts in decompose(table)
    ]
    components.sort(key=cmp_to_key(compare_by_generation))
    return tuple(components)


def isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the two tables describe isomorphic functional digraphs."""
    return canonicalize(a) == canonicalize(b)
