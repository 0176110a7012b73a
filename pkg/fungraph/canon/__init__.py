"""
Canonicalizer Brick

PUBLIC CONTRACT:
- FunctionTable: Explicit endofunction f(i) = table[i]
- validate_table(): Range check of a raw table
- ComponentParts, decompose(): Limit cycle and in-trees of every connected component
- tree_code_of(), component_code_of(): Codes of the pieces
- canonicalize(): Canonical digraph code of a table
- isomorphic(): Isomorphism test between two tables

RESPONSIBILITIES:
- Ingestion of raw endofunctions
- Canonical codes and isomorphism testing for foreign digraphs
"""

from .canonicalize import canonicalize
from .canonicalize import component_code_of
from .canonicalize import isomorphic
from .canonicalize import tree_code_of
from .decompose import ComponentParts
from .decompose import FunctionTable
from .decompose import decompose
from .decompose import validate_table

__all__ = [
    "FunctionTable",
    "validate_table",
    "ComponentParts",
    "decompose",
    "tree_code_of",
    "component_code_of",
    "canonicalize",
    "isomorphic",
]
