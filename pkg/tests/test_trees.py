"""
Tests for tree codes.

Validity, order and the merge/unmerge calculus, cross-checked against
codes of every rooted tree enumerated from parent arrays.
"""

from itertools import product

import pytest

from fungraph.core import InvalidCodeError
from fungraph.core import Ordering
from fungraph.oracle import rooted_tree_codes
from fungraph.trees import TRIVIAL
from fungraph.trees import compare_trees
from fungraph.trees import is_valid_tree_code
from fungraph.trees import merge
from fungraph.trees import tree_size
from fungraph.trees import unmerge

TREES_UP_TO_6 = sorted(set().union(*(rooted_tree_codes(n) for n in range(1, 7))))


@pytest.mark.parametrize(
    ("code", "valid"),
    [
        ((1,), True),
        ((4, 1, 2, 1), True),
        ((4, 2, 1, 1), False),
        ((3, 1), False),
        ((), False),
        ((2, 0), False),
        ((3, 1, 1), True),
    ],
)
def test_is_valid_tree_code(code, valid):
    """Test validity of hand-picked sequences."""
    assert is_valid_tree_code(code) is valid


def test_tree_size():
    assert tree_size((1,)) == 1
    assert tree_size((3, 2, 1)) == 3
    assert tree_size((4, 1, 1, 1)) == 4


def test_compare_trees():
    assert compare_trees((1,), (2, 1)) is Ordering.LT
    assert compare_trees((3, 1, 1), (3, 2, 1)) is Ordering.LT
    assert compare_trees((2, 1), (2, 1)) is Ordering.EQ
    assert compare_trees((4, 1, 1, 1), (4, 1, 2, 1)) is Ordering.LT


@pytest.mark.parametrize(
    ("window", "merged"),
    [
        ((TRIVIAL, TRIVIAL), (2, 1)),
        ((TRIVIAL, (2, 1)), (3, 2, 1)),
        ((TRIVIAL, TRIVIAL, (2, 1)), (4, 1, 2, 1)),
    ],
)
def test_merge(window, merged):
    assert merge(window) == merged
    assert is_valid_tree_code(merged)


@pytest.mark.parametrize(
    "window",
    [
        (TRIVIAL,),
        ((2, 1), TRIVIAL),
        (TRIVIAL, (2, 1), TRIVIAL),
    ],
)
def test_merge_rejects_nonconforming_windows(window):
    with pytest.raises(InvalidCodeError):
        merge(window)


@pytest.mark.parametrize(
    ("tree", "pieces"),
    [
        ((2, 1), (TRIVIAL, TRIVIAL)),
        ((4, 3, 2, 1), (TRIVIAL, (3, 2, 1))),
        ((4, 1, 1, 1), (TRIVIAL, TRIVIAL, TRIVIAL, TRIVIAL)),
    ],
)
def test_unmerge(tree, pieces):
    assert unmerge(tree) == pieces


def test_unmerge_rejects_trivial_tree():
    with pytest.raises(InvalidCodeError):
        unmerge(TRIVIAL)


@pytest.mark.parametrize("n", range(2, 8))
def test_merge_undoes_unmerge(n):
    for tree in rooted_tree_codes(n):
        assert merge(unmerge(tree)) == tree


def _nondecreasing_tails(budget, smallest):
    """Nondecreasing tuples of trees drawn from TREES_UP_TO_6, total size <= budget."""
    yield ()
    for tree in TREES_UP_TO_6:
        if tree < smallest or tree[0] > budget:
            continue
        for rest in _nondecreasing_tails(budget - tree[0], tree):
            yield (tree, *rest)


def test_unmerge_undoes_merge():
    """Every nondecreasing window with a trivial head and at most 7 vertices, one per tree."""
    windows = 0
    for tail in _nondecreasing_tails(6, TRIVIAL):
        if not tail:
            continue
        window = (TRIVIAL, *tail)
        assert unmerge(merge(window)) == window
        windows += 1
    assert windows == 84


def test_validator_accepts_exactly_the_oracle_codes():
    """All sequences over {1..6} of length at most 6."""
    codes = set(TREES_UP_TO_6)
    for length in range(1, 7):
        for seq in product(range(1, 7), repeat=length):
            assert is_valid_tree_code(seq) is (seq in codes), seq


def test_rooted_tree_counts():
    assert [len(rooted_tree_codes(n)) for n in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_compare_trees_is_a_total_order():
    trees = [t for t in TREES_UP_TO_6 if t[0] <= 5]
    for a in trees:
        for b in trees:
            ab = compare_trees(a, b)
            assert compare_trees(b, a) == -ab
            assert (ab is Ordering.EQ) == (a == b)
            for c in trees:
                if ab is Ordering.LT and compare_trees(b, c) is Ordering.LT:
                    assert compare_trees(a, c) is Ordering.LT
