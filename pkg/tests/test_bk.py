import functools

import pytest
from hypothesis import given, strategies as st

from uctk.bk import bk, bk_compare, bk_sorted, entry_compare

nodes = st.lists(st.integers(0, 4), max_size=5).map(tuple)


def cmp_int(a, b):
    return (a > b) - (a < b)


def test_spec_examples():
    assert bk_compare((0, 0), (0,), cmp_int) == -1
    assert bk_compare((0, 1), (0, 1), cmp_int) == 0
    assert bk_compare((0, 1), (0, 0, 5), cmp_int) == 1


def test_minus_one_below_everything():
    assert entry_compare(-1, 0) == -1
    assert entry_compare(-1, (0,)) == -1
    assert entry_compare((0, 1), -1) == 1


def test_nested_sequences_of_nodes():
    # entries that are nodes recurse through the same order
    assert bk(((0, 0),), ((0,),)) == -1
    assert bk(((0,), (1,)), ((0,), (0,))) == 1


@given(nodes, nodes)
def test_exactly_one_of_three(s, t):
    c = bk_compare(s, t, cmp_int)
    assert c in (-1, 0, 1)
    assert (c == 0) == (s == t)
    assert bk_compare(t, s, cmp_int) == -c


@given(nodes, nodes, nodes)
def test_transitivity(s, t, u):
    orderd = sorted([s, t, u], key=functools.cmp_to_key(lambda a, b: bk_compare(a, b, cmp_int)))
    assert bk_compare(orderd[0], orderd[2], cmp_int) <= 0


@given(nodes, st.lists(st.integers(0, 4), min_size=1, max_size=3).map(tuple))
def test_lengthening_law(s, e):
    assert bk_compare(s + e, s, cmp_int) == -1


@given(nodes, nodes, nodes, nodes)
def test_antitone_prefix_law(s, t, e, e2):
    c = bk_compare(s, t, cmp_int)
    if c == -1 and not (s[:len(t)] == t or t[:len(s)] == s):
        assert bk_compare(s + e, t + e2, cmp_int) == -1


def test_sorting_helper():
    seqs = [(0,), (0, 0), (1,), ()]
    assert bk_sorted(seqs) == [(0, 0), (0,), (1,), ()]


def test_incomparable_entries_raise():
    with pytest.raises(TypeError):
        entry_compare((0,), "x")
