"""
Components Brick

PUBLIC CONTRACT:
- ComponentCode: Canonical code of a connected functional digraph
- cycle(), component_size(), is_cycle(): Construction and inspection
- is_canonical(), canonical_rotation(), least_rotation(), flatten(): Minimal rotation machinery
- compare_components(), component_violation(): Order and validation
- cunmerge(), merges(): Component-unmerge and the set of canonical merges
- ComponentSuccessor, SuccessorKind: Result of successor_component()
- successor_component(), generate_components(), generate_all_components(): Generation

RESPONSIBILITIES:
- Canonical codes of connected functional digraphs
- The successor algorithm over components
- Streaming generation of all components of a given size
"""

from .code import ComponentCode
from .code import canonical_rotation
from .code import compare_components
from .code import component_size
from .code import component_violation
from .code import cunmerge
from .code import cycle
from .code import flatten
from .code import is_canonical
from .code import is_cycle
from .code import least_rotation
from .generator import ComponentSuccessor
from .generator import SuccessorKind
from .generator import generate_all_components
from .generator import generate_components
from .generator import merges
from .generator import successor_component

__all__ = [
    "ComponentCode",
    "cycle",
    "component_size",
    "is_cycle",
    "flatten",
    "least_rotation",
    "is_canonical",
    "canonical_rotation",
    "compare_components",
    "component_violation",
    "cunmerge",
    "merges",
    "ComponentSuccessor",
    "SuccessorKind",
    "successor_component",
    "generate_components",
    "generate_all_components",
]
