"""
Oracle Brick

PUBLIC CONTRACT:
- enumerate_tables(): All n^n function tables in odometer order
- classify(), Classification: Canonical codes of all digraphs and components on n vertices
- realize(): A function table realizing a digraph code
- verify(), VerifyReport, SizeCheck: Generator-versus-oracle equivalence
- rooted_tree_codes(), naive_partitions(), naive_is_canonical(), brute_force_isomorphic(): Naive references

RESPONSIBILITIES:
- Independent brute-force ground truth at small sizes
- Witness tables for generated codes
"""

from .brute import brute_force_isomorphic
from .brute import naive_is_canonical
from .brute import naive_partitions
from .brute import rooted_tree_codes
from .equivalence import verify
from .models import Classification
from .models import SizeCheck
from .models import VerifyReport
from .tables import classify
from .tables import enumerate_tables
from .tables import realize

__all__ = [
    "enumerate_tables",
    "classify",
    "Classification",
    "realize",
    "verify",
    "VerifyReport",
    "SizeCheck",
    "rooted_tree_codes",
    "naive_partitions",
    "naive_is_canonical",
    "brute_force_isomorphic",
]
