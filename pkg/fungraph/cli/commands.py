"""
Subcommand handlers.

Each handler takes the parsed arguments and the output stream and returns
an exit code. Usage and parse problems surface as FungraphError
subclasses, which the entry point maps to exit status 2.
"""

import argparse
from collections.abc import Iterator
from itertools import islice
from typing import Any
from typing import TextIO

import structlog

from ..bench import run_bench
from ..canon import canonicalize
from ..canon import isomorphic
from ..codec import parse_component
from ..codec import parse_digraph
from ..codec import parse_table
from ..codec import render_code
from ..codec import render_record
from ..components import generate_components
from ..config import settings
from ..core import CodeParseError
from ..core import UsageError
from ..digraphs import generate_digraphs
from ..oracle import verify

logger = structlog.get_logger(__name__)


def _stream(args: argparse.Namespace) -> Iterator[Any]:
    n = args.size
    if not 1 <= n <= settings.MAX_SIZE:
        raise UsageError(f"size must be in 1..{settings.MAX_SIZE}, got {n}")
    if args.limit is not None and args.limit < 0:
        raise UsageError(f"limit must be nonnegative, got {args.limit}")

    if args.connected:
        start = parse_component(args.start, size=n) if args.start is not None else None
        stream = generate_components(n, start)
    else:
        start = parse_digraph(args.start, size=n) if args.start is not None else None
        stream = generate_digraphs(n, start)

    if args.limit is not None:
        return islice(stream, args.limit)
    return stream


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    """Write codes of the requested size, one per line, in generation order."""
    stream = _stream(args)

    if args.count_only:
        out.write(f"{sum(1 for _ in stream)}\n")
        return 0

    json_format = args.format == "json"
    for index, code in enumerate(stream):
        out.write(render_record(index, code) if json_format else render_code(code))
        out.write("\n")
    return 0


def cmd_canon(args: argparse.Namespace, out: TextIO) -> int:
    """Write the canonical code of every table read, or iso/non-iso per pair."""
    json_format = args.format == "json"
    index = 0
    for number, raw in enumerate(args.input, start=1):
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CodeParseError(f"not UTF-8 text: {exc.reason} at byte {exc.start}", line=number)
        if not line.strip():
            continue

        if args.check_iso:
            halves = line.split(",")
            if len(halves) != 2:
                raise CodeParseError("expected two tables separated by a comma", line=number)
            a, b = (parse_table(half, line=number) for half in halves)
            out.write("iso\n" if isomorphic(a, b) else "non-iso\n")
            continue

        code = canonicalize(parse_table(line, line=number))
        out.write(render_record(index, code) if json_format else render_code(code))
        out.write("\n")
        index += 1
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    """Compare generator output with the oracle; exit 1 on the first mismatch."""
    if not 1 <= args.n_max <= settings.ORACLE_MAX_N:
        raise UsageError(f"n_max must be in 1..{settings.ORACLE_MAX_N}, got {args.n_max}")

    report = verify(args.n_max, args.workers)
    for check in report.sizes:
        out.write(f"n={check.n} components={check.components} digraphs={check.digraphs}\n")

    failure = report.first_failure
    if failure is not None:
        out.write(f"mismatch at n={failure.n}: {failure.mismatch}\n")
        logger.warning("Verification failed", n=failure.n, mismatch=failure.mismatch)
        return 1
    return 0


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    """Report per-size delay statistics and the fitted log-log slope."""
    if any(n < 1 for n in args.sizes):
        raise UsageError("bench sizes must be positive")
    if args.limit is not None and args.limit < 1:
        raise UsageError(f"limit must be positive, got {args.limit}")

    report = run_bench(args.sizes, connected=args.connected, limit=args.limit)

    if args.format == "json":
        out.write(report.model_dump_json())
        out.write("\n")
        return 0

    for timing in report.sizes:
        out.write(
            f"n={timing.n} calls={timing.calls} "
            f"max={timing.max_seconds:.6f}s mean={timing.mean_seconds:.6f}s\n"
        )
    slope = "n/a" if report.slope is None else f"{report.slope:.2f}"
    out.write(f"slope={slope} bound={report.slope_bound}\n")
    return 0
