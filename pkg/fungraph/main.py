"""
fungraph - Main command-line application

This is the entry point that assembles all the modular bricks.
Each brick provides its contract through well-defined interfaces.
"""

import os
import sys
from collections.abc import Sequence
from typing import TextIO

import structlog

from .cli import build_parser
from .config import settings
from .core import FungraphError
from .core import setup_logging

logger = structlog.get_logger(__name__)


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """
    Parse arguments, run one subcommand and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        out: Stream for codes and reports; defaults to sys.stdout

    Returns:
        0 on success, 1 on verification mismatch, 2 on usage or parse errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging("INFO" if args.verbose else settings.LOG_LEVEL)
    out = out or sys.stdout

    try:
        return args.handler(args, out)
    except FungraphError as exc:
        logger.info("Command rejected", command=args.command, error=str(exc))
        sys.stderr.write(f"fungraph {args.command}: {exc}\n")
        return 2
    except BrokenPipeError:
        # downstream consumer such as `head` closed the pipe; the interpreter
        # still flushes stdout at exit, so point it at devnull
        if out is sys.stdout:
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
            os.close(devnull)
        return 0


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
