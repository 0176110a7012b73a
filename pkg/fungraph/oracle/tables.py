"""
Brute-force enumeration of function tables.

Tables are split by their first entry; each slice is classified on its
own and the slices are merged by set union, so the work can be spread
over a process pool.
"""

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import structlog

from ..canon import FunctionTable
from ..canon import canonicalize
from ..components import component_violation
from ..config import settings
from ..core import InvalidCodeError
from ..core import OracleGuardError
from ..digraphs import DigraphCode
from ..trees import subtrees
from .models import Classification

logger = structlog.get_logger(__name__)


def guard_size(n: int) -> None:
    """Raise OracleGuardError unless 1 <= n <= settings.ORACLE_MAX_N."""
    if not 1 <= n <= settings.ORACLE_MAX_N:
        raise OracleGuardError(f"oracle size must be in 1..{settings.ORACLE_MAX_N}, got {n}")


def enumerate_tables(n: int) -> Iterator[FunctionTable]:
    """
    Yield all n^n function tables on n vertices, last entry fastest.

    Raises:
        OracleGuardError: If n is outside 1..settings.ORACLE_MAX_N
    """
    guard_size(n)
    yield from product(range(n), repeat=n)


def _classify_slice(n: int, first: int) -> set[DigraphCode]:
    return {canonicalize((first, *rest)) for rest in product(range(n), repeat=n - 1)}


def classify(n: int, workers: int | None = None) -> Classification:
    """
    Canonical codes of all digraphs on n vertices, and of the connected ones.

    Args:
        n: Number of vertices
        workers: Process pool width; defaults to settings.ORACLE_WORKERS

    Raises:
        OracleGuardError: If n is outside 1..settings.ORACLE_MAX_N
    """
    guard_size(n)
    workers = workers or settings.ORACLE_WORKERS

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            slices = list(pool.map(_classify_slice, [n] * n, range(n)))
    else:
        slices = [_classify_slice(n, first) for first in range(n)]

    digraphs: set[DigraphCode] = set().union(*slices)
    components = {g[0] for g in digraphs if len(g) == 1}

    logger.info("Oracle classification finished", n=n, digraphs=len(digraphs), components=len(components))
    return Classification(n=n, digraphs=frozenset(digraphs), components=frozenset(components))


def realize(g: DigraphCode) -> FunctionTable:
    """
    Build a function table whose canonical code is g.

    Vertices are numbered in traversal order: the cycle of each component
    first, then its trees depth first.

    Raises:
        InvalidCodeError: If a component of g is not a canonical code
    """
    table: list[int] = []
    for c in g:
        violation = component_violation(c)
        if violation is not None:
            raise InvalidCodeError(violation)

        base = len(table)
        k = len(c)
        table.extend(base + (i + 1) % k for i in range(k))

        stack = [(base + i, tree) for i, tree in enumerate(c)]
        while stack:
            vertex, tree = stack.pop()
            for child in subtrees(tree):
                stack.append((len(table), child))
                table.append(vertex)
    return tuple(table)
