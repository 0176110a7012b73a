"""
Argument parser for the fungraph command line.
"""

import argparse

from ..config import settings
from .commands import cmd_bench
from .commands import cmd_canon
from .commands import cmd_gen
from .commands import cmd_verify


def build_parser() -> argparse.ArgumentParser:
    """Build the top-level parser; each subcommand stores its handler in `handler`."""
    parser = argparse.ArgumentParser(
        prog="fungraph",
        description="Isomorphism-free generation of functional digraphs",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="stream digraph or component codes in generation order")
    gen.add_argument("-n", "--size", type=int, required=True, help="number of vertices")
    gen.add_argument("--connected", action="store_true", help="generate connected digraphs only")
    gen.add_argument("--limit", type=int, default=None, help="stop after this many codes")
    gen.add_argument("--start", default=None, help="resume after this code")
    gen.add_argument("--count", dest="count_only", action="store_true", help="print only the number of codes")
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.set_defaults(handler=cmd_gen)

    canon = subparsers.add_parser("canon", help="canonicalize function tables, one per line")
    canon.add_argument("input", nargs="?", type=argparse.FileType("rb"), default="-", help="file (default: stdin)")
    canon.add_argument(
        "--check-iso", action="store_true", help="each line holds two comma-separated tables; print iso/non-iso"
    )
    canon.add_argument("--format", choices=["text", "json"], default="text")
    canon.set_defaults(handler=cmd_canon)

    verify = subparsers.add_parser("verify", help="check the generators against the brute-force oracle")
    verify.add_argument("n_max", type=int, help=f"largest size to check (at most {settings.ORACLE_MAX_N})")
    verify.add_argument("--workers", type=int, default=None, help="oracle process pool width")
    verify.set_defaults(handler=cmd_verify)

    bench = subparsers.add_parser("bench", help="measure the delay between consecutive outputs")
    bench.add_argument("sizes", type=int, nargs="+", help="sizes to time")
    bench.add_argument("--limit", type=int, default=None, help="successor calls timed per size")
    bench.add_argument("--connected", action="store_true", help="time the connected generator")
    bench.add_argument("--format", choices=["text", "json"], default="text")
    bench.set_defaults(handler=cmd_bench)

    return parser
