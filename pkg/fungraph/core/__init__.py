"""
Core Brick

PUBLIC CONTRACT:
- setup_logging(): Initialize structured logging
- Ordering: Three-way comparison result
- compare(): Three-way comparison of two values
- FungraphError and its subclasses: Error types shared by all bricks

RESPONSIBILITIES:
- Structured logging setup
- Error hierarchy
- Comparison primitives
"""

from .errors import CodeParseError
from .errors import FungraphError
from .errors import InvalidCodeError
from .errors import InvalidTableError
from .errors import OracleGuardError
from .errors import UsageError
from .logging import setup_logging
from .ordering import Ordering
from .ordering import compare

__all__ = [
    "setup_logging",
    "Ordering",
    "compare",
    "FungraphError",
    "InvalidCodeError",
    "InvalidTableError",
    "CodeParseError",
    "OracleGuardError",
    "UsageError",
]
