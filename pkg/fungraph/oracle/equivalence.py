"""
Generator-versus-oracle equivalence.

For each size the generated streams must be duplicate-free and must
produce exactly the oracle's canonical sets.
"""

from collections.abc import Iterable
from collections.abc import Set
from typing import Any

import structlog

from ..codec import render_code
from ..components import generate_components
from ..digraphs import generate_digraphs
from .models import SizeCheck
from .models import VerifyReport
from .tables import classify
from .tables import guard_size

logger = structlog.get_logger(__name__)


def _first_mismatch(stream: Iterable[Any], expected: Set[Any]) -> tuple[int, str | None]:
    seen: set[Any] = set()
    for code in stream:
        if code in seen:
            return len(seen), f"emitted twice: {render_code(code)}"
        seen.add(code)
    missing = sorted(expected - seen)
    if missing:
        return len(seen), f"missing from generator: {render_code(missing[0])}"
    extra = sorted(seen - expected)
    if extra:
        return len(seen), f"unknown to oracle: {render_code(extra[0])}"
    return len(seen), None


def verify(n_max: int, workers: int | None = None) -> VerifyReport:
    """
    Check the generators against the oracle for every size 1..n_max.

    Raises:
        OracleGuardError: If n_max is outside the oracle guard range
    """
    guard_size(n_max)
    report = VerifyReport(n_max=n_max)

    for n in range(1, n_max + 1):
        oracle = classify(n, workers)
        components, component_mismatch = _first_mismatch(generate_components(n), oracle.components)
        digraphs, digraph_mismatch = _first_mismatch(generate_digraphs(n), oracle.digraphs)
        check = SizeCheck(
            n=n,
            components=components,
            digraphs=digraphs,
            oracle_components=len(oracle.components),
            oracle_digraphs=len(oracle.digraphs),
            mismatch=component_mismatch or digraph_mismatch,
        )
        report.sizes.append(check)
        logger.info("Verified size", n=n, components=components, digraphs=digraphs, ok=check.ok)

    return report
