"""
Oracle data models.

Defines the structure for classification results and verification reports.
"""

from pydantic import BaseModel
from pydantic import Field

from ..components import ComponentCode
from ..digraphs import DigraphCode


class Classification(BaseModel):
    """Canonical codes of every functional digraph on n vertices."""

    n: int
    digraphs: frozenset[DigraphCode]
    components: frozenset[ComponentCode]


class SizeCheck(BaseModel):
    """Generator-versus-oracle comparison for one size."""

    n: int
    components: int
    digraphs: int
    oracle_components: int
    oracle_digraphs: int

    # First code found on one side only (or emitted twice), rendered as text
    mismatch: str | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


class VerifyReport(BaseModel):
    """Verification results for sizes 1..n_max."""

    n_max: int
    sizes: list[SizeCheck] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.sizes)

    @property
    def first_failure(self) -> SizeCheck | None:
        return next((check for check in self.sizes if not check.ok), None)
