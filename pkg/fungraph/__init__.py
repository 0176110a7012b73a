"""
fungraph - Isomorphism-free generation of functional digraphs

Main package that orchestrates all bricks.
"""

from .main import main

__all__ = ["main"]
