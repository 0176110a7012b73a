"""
Tests for digraph codes, their order and the digraph successor.
"""

from functools import cmp_to_key
from itertools import islice

import pytest

from fungraph.core import InvalidCodeError
from fungraph.core import Ordering
from fungraph.digraphs import EMPTY_DIGRAPH
from fungraph.digraphs import compare_by_generation
from fungraph.digraphs import compare_digraphs
from fungraph.digraphs import digraph_violation
from fungraph.digraphs import generate_all_digraphs
from fungraph.digraphs import generate_digraphs
from fungraph.digraphs import generation_rank
from fungraph.digraphs import partition_of
from fungraph.digraphs import successor_digraph
from fungraph.oracle import classify
from tests.conftest import C1
from tests.conftest import C5
from tests.conftest import C9
from tests.conftest import DIGRAPH_COUNTS
from tests.conftest import G1
from tests.conftest import G2
from tests.conftest import G3
from tests.conftest import G4
from tests.conftest import G5
from tests.conftest import G7
from tests.conftest import G8
from tests.conftest import G9
from tests.conftest import G10
from tests.conftest import LOOP
from tests.conftest import T1


def test_partition_of():
    assert partition_of(G2) == (1, 1, 2)
    assert partition_of(EMPTY_DIGRAPH) == ()
    assert partition_of(G8) == (2, 2)


def test_generation_rank():
    assert generation_rank(C1) == 0
    assert generation_rank(C5) == 4
    assert generation_rank(C9) == 8


def test_generation_rank_rejects_noncanonical():
    with pytest.raises(InvalidCodeError):
        generation_rank(((2, 1), T1))


def test_compare_digraphs():
    assert compare_digraphs(G3, G4) is Ordering.LT
    assert compare_digraphs(G9, G10) is Ordering.LT
    assert compare_digraphs(G5, G5) is Ordering.EQ
    assert compare_digraphs(G10, G9) is Ordering.GT
    assert compare_digraphs(EMPTY_DIGRAPH, (LOOP,)) is Ordering.LT


def test_compare_by_generation_orders_by_size_first():
    assert compare_by_generation(C9, (T1,) * 5) is Ordering.LT
    assert compare_by_generation((T1, (3, 1, 1)), C5) is Ordering.GT


@pytest.mark.parametrize(
    ("digraph", "successor"),
    [
        (G1, G2),
        (G9, G10),
        (EMPTY_DIGRAPH, (LOOP,)),
        (G7, G8),
        (G10, (C1,)),
    ],
)
def test_successor_digraph(digraph, successor):
    assert successor_digraph(digraph) == successor


def test_successor_digraph_wraps_to_next_size():
    assert successor_digraph((C9,)) == (LOOP,) * 5


def test_generate_digraphs_4(golden_digraphs):
    assert list(generate_digraphs(4)) == golden_digraphs


def test_generate_digraphs_1():
    assert list(generate_digraphs(1)) == [(LOOP,)]


def test_generate_digraphs_resumes_after_start(golden_digraphs):
    assert list(generate_digraphs(4, start=G9)) == golden_digraphs[9:]


def test_generate_digraphs_rejects_empty_size():
    with pytest.raises(InvalidCodeError):
        list(generate_digraphs(0))


def test_digraph_counts():
    assert [sum(1 for _ in generate_digraphs(n)) for n in range(1, 8)] == DIGRAPH_COUNTS


def test_generated_digraphs_are_canonical():
    for n in range(1, 7):
        stream = list(generate_digraphs(n))
        assert len(set(stream)) == len(stream)
        for g in stream:
            assert digraph_violation(g) is None


def test_digraph_violation_names_the_problem():
    assert "smaller" in digraph_violation(((T1, T1), LOOP))
    assert "generation order" in digraph_violation((C9, C1))
    assert "minimal rotation" in digraph_violation((((2, 1), T1),))
    assert digraph_violation(EMPTY_DIGRAPH) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_consecutive_outputs_are_immediate_successors(n):
    """Sorting the oracle's set by the digraph order reproduces the stream."""
    stream = list(generate_digraphs(n))
    expected = sorted(classify(n).digraphs, key=cmp_to_key(compare_digraphs))
    assert stream == expected
    for g, following in zip(stream, stream[1:], strict=False):
        assert compare_digraphs(g, following) is Ordering.LT


def test_compare_digraphs_is_a_total_order():
    """On all digraphs up to 5 vertices the order agrees with stream position."""
    ordered = [g for n in range(1, 6) for g in generate_digraphs(n)]
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            assert compare_digraphs(a, b) == Ordering((i > j) - (i < j))


def test_generate_all_digraphs_starts_from_the_empty_digraph():
    expected = [g for n in range(1, 5) for g in generate_digraphs(n)]
    assert list(islice(generate_all_digraphs(), len(expected))) == expected
