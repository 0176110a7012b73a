"""
Pytest configuration and shared fixtures for fungraph tests.

Provides the worked n = 4 sequences and common helpers that can be used
across all test modules.
"""

import io

import pytest

from fungraph.config import settings
from fungraph.main import main

T1 = (1,)

C1 = (T1, T1, T1, T1)
C2 = (T1, T1, (2, 1))
C3 = (T1, (3, 2, 1))
C4 = ((4, 3, 2, 1),)
C5 = ((2, 1), (2, 1))
C6 = ((4, 1, 2, 1),)
C7 = (T1, (3, 1, 1))
C8 = ((4, 3, 1, 1),)
C9 = ((4, 1, 1, 1),)

LOOP = (T1,)
TWO_CYCLE = (T1, T1)

G1 = (LOOP, LOOP, LOOP, LOOP)
G2 = (LOOP, LOOP, TWO_CYCLE)
G3 = (LOOP, LOOP, ((2, 1),))
G4 = (LOOP, (T1, T1, T1))
G5 = (LOOP, (T1, (2, 1)))
G6 = (LOOP, ((3, 2, 1),))
G7 = (LOOP, ((3, 1, 1),))
G8 = (TWO_CYCLE, TWO_CYCLE)
G9 = (TWO_CYCLE, ((2, 1),))
G10 = (((2, 1),), ((2, 1),))

COMPONENTS_4 = [C1, C2, C3, C4, C5, C6, C7, C8, C9]
DIGRAPHS_4 = [G1, G2, G3, G4, G5, G6, G7, G8, G9, G10] + [(c,) for c in COMPONENTS_4]

# Connected and arbitrary functional digraphs on n = 1..7 vertices
COMPONENT_COUNTS = [1, 2, 4, 9, 20, 51, 125]
DIGRAPH_COUNTS = [1, 3, 7, 19, 47, 130, 343]


@pytest.fixture
def golden_components():
    """The nine components on four vertices in generation order."""
    return list(COMPONENTS_4)


@pytest.fixture
def golden_digraphs():
    """The nineteen functional digraphs on four vertices in generation order."""
    return list(DIGRAPHS_4)


@pytest.fixture
def debug_mode(monkeypatch):
    """Enable the canonicality checks of the successor functions."""
    monkeypatch.setattr(settings, "DEBUG", True)


@pytest.fixture
def run_cli():
    """Run the command line in-process and return (exit code, stdout lines)."""

    def _run(*argv: str) -> tuple[int, list[str]]:
        out = io.StringIO()
        code = main(list(argv), out=out)
        return code, out.getvalue().splitlines()

    return _run
