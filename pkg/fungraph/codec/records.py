"""
JSON records for generated codes.
"""

from typing import Any

from pydantic import BaseModel


class CodeRecord(BaseModel):
    """One generated code with its position in the stream."""

    index: int
    code: tuple[Any, ...]


def render_record(index: int, code: tuple[Any, ...]) -> str:
    """Render a code as a single-line JSON object."""
    return CodeRecord(index=index, code=code).model_dump_json()
