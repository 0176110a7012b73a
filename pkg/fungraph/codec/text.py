"""
Text grammar for codes and tables.

A tree code renders as [i1,i2,...], a component as [T1,T2,...] and a
digraph as [C1,C2,...], without whitespace. The grammar is a subset of
JSON, so rendering and tokenising go through the json module and only
the nesting and the code invariants are checked here.
"""

import json
from typing import Any

from ..canon import FunctionTable
from ..canon import validate_table
from ..components import ComponentCode
from ..components import component_size
from ..components import component_violation
from ..core import CodeParseError
from ..core import InvalidTableError
from ..digraphs import DigraphCode
from ..digraphs import digraph_size
from ..digraphs import digraph_violation


def render_code(code: Any) -> str:
    """Render a tree, component or digraph code in the bracket grammar."""
    return json.dumps(code, separators=(",", ":"))


_KINDS = {1: "tree", 2: "component", 3: "digraph"}


def _nested(value: Any, depth: int) -> Any:
    """Convert nested lists of the given depth into tuples, checking shape."""
    what = _KINDS[depth]
    if not isinstance(value, list):
        raise CodeParseError(f"{what} must be a bracketed list")
    if depth == 1:
        if any(type(x) is not int for x in value):
            raise CodeParseError(f"{what} must contain only integers")
        return tuple(value)
    return tuple(_nested(item, depth - 1) for item in value)


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeParseError(f"malformed code: {exc.msg} at column {exc.colno}")
    except RecursionError:
        raise CodeParseError("malformed code: brackets nested too deeply")


def parse_component(text: str, size: int | None = None) -> ComponentCode:
    """
    Parse a canonical component code.

    Args:
        text: Bracket text such as [[1],[2,1]]
        size: Required number of vertices, if any

    Raises:
        CodeParseError: Naming the first violated invariant
    """
    code = _nested(_load(text), 2)
    violation = component_violation(code)
    if violation is not None:
        raise CodeParseError(violation)
    if size is not None and component_size(code) != size:
        raise CodeParseError(f"component has {component_size(code)} vertices, expected {size}")
    return code


def parse_digraph(text: str, size: int | None = None) -> DigraphCode:
    """
    Parse a canonical digraph code.

    Args:
        text: Bracket text such as [[[1]],[[1],[1]]]
        size: Required number of vertices, if any

    Raises:
        CodeParseError: Naming the first violated invariant
    """
    code = _nested(_load(text), 3)
    violation = digraph_violation(code)
    if violation is not None:
        raise CodeParseError(violation)
    if size is not None and digraph_size(code) != size:
        raise CodeParseError(f"digraph has {digraph_size(code)} vertices, expected {size}")
    return code


def parse_table(text: str, line: int | None = None) -> FunctionTable:
    """
    Parse one function table: n whitespace-separated integers in 0..n-1.

    Raises:
        CodeParseError: If a token is not an integer or is out of range
    """
    try:
        values = [int(token) for token in text.split()]
    except ValueError as exc:
        raise CodeParseError(f"malformed table: {exc}", line=line)
    try:
        return validate_table(values)
    except InvalidTableError as exc:
        raise CodeParseError(str(exc), line=line)
