"""
Naive reference implementations.

Each function here decides its question by exhaustive search and shares
no code path with the generators it is used to check.
"""

from collections.abc import Sequence
from functools import lru_cache
from itertools import permutations
from itertools import product

from ..canon import tree_code_of
from ..trees import TreeCode


@lru_cache(maxsize=None)
def rooted_tree_codes(n: int) -> frozenset[TreeCode]:
    """
    Codes of all rooted trees on n vertices.

    Every parent array with vertex 0 as root is tried; arrays whose parent
    pointers do not all lead to the root are skipped.
    """
    codes: set[TreeCode] = set()
    for parents in product(range(n), repeat=n - 1):
        parent = (0, *parents)
        if not all(_reaches_root(parent, v) for v in range(1, n)):
            continue
        predecessors: dict[int, list[int]] = {}
        for v in range(1, n):
            predecessors.setdefault(parent[v], []).append(v)
        codes.add(tree_code_of(0, predecessors))
    return frozenset(codes)


def _reaches_root(parent: Sequence[int], v: int) -> bool:
    for _ in range(len(parent)):
        if v == 0:
            return True
        v = parent[v]
    return v == 0


def naive_partitions(n: int, smallest: int = 1) -> list[tuple[int, ...]]:
    """All partitions of n into parts >= smallest, ascending, in lexicographic order."""
    if n == 0:
        return [()]
    return [(first, *rest) for first in range(smallest, n + 1) for rest in naive_partitions(n - first, first)]


def naive_is_canonical(trees: Sequence[TreeCode]) -> bool:
    """True iff no rotation of the tree sequence is lexicographically smaller."""
    trees = tuple(trees)
    return all(trees <= trees[r:] + trees[:r] for r in range(len(trees)))


def brute_force_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff some bijection p satisfies p(a[i]) = b[p(i)] for every vertex i."""
    n = len(a)
    if n != len(b):
        return False
    if sorted(a.count(v) for v in range(n)) != sorted(b.count(v) for v in range(n)):
        return False
    return any(all(p[a[i]] == b[p[i]] for i in range(n)) for p in permutations(range(n)))
