"""
Bench Brick

PUBLIC CONTRACT:
- time_successors(): Per-successor wall times along one size's stream
- fit_slope(): Log-log slope of maximum delay against size
- run_bench(): Timings for several sizes plus the fitted slope
- SizeTiming, BenchReport, StreamKind: Result models

RESPONSIBILITIES:
- Empirical measurement of the delay between consecutive outputs
- Aggregation of timing statistics across sizes
"""

from .engine import fit_slope
from .engine import run_bench
from .engine import time_successors
from .models import BenchReport
from .models import SizeTiming
from .models import StreamKind

__all__ = [
    "time_successors",
    "fit_slope",
    "run_bench",
    "SizeTiming",
    "BenchReport",
    "StreamKind",
]
