"""
Trees Brick

PUBLIC CONTRACT:
- TreeCode: Flat size-prefixed code of a rooted unordered tree
- TRIVIAL: The code of the single-vertex tree
- is_valid_tree_code(), tree_size(), compare_trees(): Validity, size and order
- merge(), unmerge(): Attach a window of trees below a trivial root, and its inverse
- merge_window(): merge() without precondition checks
- subtrees(): Immediate subtree codes in stored order

RESPONSIBILITIES:
- Tree isomorphism codes and their lexicographic order
- The merge/unmerge calculus on sequences of trees
"""

from .code import TRIVIAL
from .code import TreeCode
from .code import compare_trees
from .code import is_valid_tree_code
from .code import merge
from .code import merge_window
from .code import subtrees
from .code import tree_size
from .code import unmerge

__all__ = [
    "TreeCode",
    "TRIVIAL",
    "is_valid_tree_code",
    "tree_size",
    "compare_trees",
    "merge",
    "merge_window",
    "unmerge",
    "subtrees",
]
