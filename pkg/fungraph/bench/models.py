"""
Benchmark data models.

Defines the structure for per-size timings and aggregated reports.
"""

from enum import Enum

from pydantic import BaseModel
from pydantic import Field


class StreamKind(str, Enum):
    """Which successor function is timed."""

    CONNECTED = "connected"
    DIGRAPHS = "digraphs"


class SizeTiming(BaseModel):
    """Delay statistics for one size."""

    n: int
    calls: int
    max_seconds: float
    mean_seconds: float
    total_seconds: float


class BenchReport(BaseModel):
    """Aggregated delay statistics across sizes."""

    kind: StreamKind
    limit: int
    sizes: list[SizeTiming] = Field(default_factory=list)

    # Log-log slope of max_seconds against n; None with fewer than two usable sizes
    slope: float | None = None
    slope_bound: float

    @property
    def within_bound(self) -> bool | None:
        if self.slope is None:
            return None
        return self.slope <= self.slope_bound
