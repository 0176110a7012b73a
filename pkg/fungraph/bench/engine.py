"""
Delay measurement engine.

Walks a size-n stream from its first code and times each successor call
with a monotonic high-resolution clock. The call that leaves the size is
timed too, since it is part of the delay before the stream ends.
"""

import time
from collections.abc import Sequence

import numpy as np
import structlog

from ..components import cycle
from ..components import successor_component
from ..config import settings
from ..core import UsageError
from ..digraphs import digraph_size
from ..digraphs import successor_digraph
from ..partitions import first_partition
from .models import BenchReport
from .models import SizeTiming
from .models import StreamKind

logger = structlog.get_logger(__name__)


def _time_connected(n: int, limit: int) -> list[float]:
    times: list[float] = []
    current = cycle(n)
    while len(times) < limit:
        start = time.perf_counter()
        successor = successor_component(current)
        times.append(time.perf_counter() - start)
        if not successor.same_size:
            break
        current = successor.component
    return times


def _time_digraphs(n: int, limit: int) -> list[float]:
    times: list[float] = []
    current = tuple(cycle(part) for part in first_partition(n))
    while len(times) < limit:
        start = time.perf_counter()
        following = successor_digraph(current)
        times.append(time.perf_counter() - start)
        if digraph_size(following) != n:
            break
        current = following
    return times


def time_successors(n: int, connected: bool = False, limit: int | None = None) -> SizeTiming:
    """
    Time successor calls along the size-n stream.

    Args:
        n: Number of vertices
        connected: Time successor_component instead of successor_digraph
        limit: Maximum number of timed calls; defaults to settings.BENCH_LIMIT

    Returns:
        Delay statistics for n
    """
    if n < 1:
        raise UsageError(f"bench sizes must be positive, got {n}")
    limit = limit or settings.BENCH_LIMIT
    times = _time_connected(n, limit) if connected else _time_digraphs(n, limit)

    timing = SizeTiming(
        n=n,
        calls=len(times),
        max_seconds=max(times),
        mean_seconds=sum(times) / len(times),
        total_seconds=sum(times),
    )
    logger.info("Timed size", n=n, calls=timing.calls, max_seconds=timing.max_seconds)
    return timing


def fit_slope(timings: Sequence[SizeTiming]) -> float | None:
    """
    Least-squares slope of log(max delay) against log(n).

    Returns:
        The slope, or None when fewer than two distinct sizes with positive times exist
    """
    usable = [t for t in timings if t.n > 1 and t.max_seconds > 0]
    if len({t.n for t in usable}) < 2:
        return None
    xs = np.log([t.n for t in usable])
    ys = np.log([t.max_seconds for t in usable])
    slope, _intercept = np.polyfit(xs, ys, 1)
    return float(slope)


def run_bench(sizes: Sequence[int], connected: bool = False, limit: int | None = None) -> BenchReport:
    """Time every size and fit the delay slope across them."""
    limit = limit or settings.BENCH_LIMIT
    report = BenchReport(
        kind=StreamKind.CONNECTED if connected else StreamKind.DIGRAPHS,
        limit=limit,
        slope_bound=settings.BENCH_SLOPE_BOUND,
    )
    for n in sizes:
        report.sizes.append(time_successors(n, connected, limit))
    report.slope = fit_slope(report.sizes)

    logger.info("Benchmark finished", kind=report.kind.value, sizes=list(sizes), slope=report.slope)
    return report
