"""
Error types shared by all fungraph bricks.

Every precondition violation on codes or tables raises a subclass of
FungraphError, so callers (mostly the CLI) can catch one type.
"""


class FungraphError(Exception):
    """Base class for all fungraph errors."""


class InvalidCodeError(FungraphError, ValueError):
    """A tree, component or digraph code violates an operation's precondition."""


class InvalidTableError(FungraphError, ValueError):
    """A function table has an entry outside {0, ..., n-1}."""


class OracleGuardError(InvalidCodeError):
    """The brute-force oracle was asked for a size outside its guard range."""


class CodeParseError(FungraphError, ValueError):
    """Text could not be parsed into a code or table of the requested kind."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(FungraphError):
    """A command-line argument is outside its accepted range."""
