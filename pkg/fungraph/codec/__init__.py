"""
Codec Brick

PUBLIC CONTRACT:
- render_code(): Bracket text of a tree, component or digraph code
- CodeRecord, render_record(): One JSON object per generated code
- parse_component(), parse_digraph(): Text to validated canonical codes
- parse_table(): Whitespace-separated function table to a FunctionTable

RESPONSIBILITIES:
- The line-oriented text grammar of codes and tables
- JSON record output
- Diagnostics naming the first violated invariant of foreign input
"""

from .records import CodeRecord
from .records import render_record
from .text import parse_component
from .text import parse_digraph
from .text import parse_table
from .text import render_code

__all__ = [
    "render_code",
    "CodeRecord",
    "render_record",
    "parse_component",
    "parse_digraph",
    "parse_table",
]
