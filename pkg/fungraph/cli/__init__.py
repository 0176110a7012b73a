"""
CLI Brick

PUBLIC CONTRACT:
- build_parser(): argparse parser with the gen, canon, verify and bench subcommands
- cmd_gen(), cmd_canon(), cmd_verify(), cmd_bench(): Subcommand handlers returning exit codes

RESPONSIBILITIES:
- Command-line surface and argument validation
- Streaming generated codes to standard output
- Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error
"""

from .commands import cmd_bench
from .commands import cmd_canon
from .commands import cmd_gen
from .commands import cmd_verify
from .parser import build_parser

__all__ = ["build_parser", "cmd_gen", "cmd_canon", "cmd_verify", "cmd_bench"]
