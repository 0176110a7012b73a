"""
Logging configuration for fungraph.

Sets up structured logging using structlog. Standard output is reserved
for generated codes, so log records are written to standard error.
"""

import logging
import sys

import structlog

from ..config import settings


def setup_logging(level: str | None = None) -> None:
    """
    Configure structured logging for the application.

    Uses structlog for consistent, structured log output that's
    both human-readable on a terminal and machine-parsable when redirected.

    Args:
        level: Level name such as "INFO"; defaults to settings.LOG_LEVEL
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    numeric_level = logging.getLevelName(level_name)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer() if sys.stderr.isatty() else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.WriteLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
