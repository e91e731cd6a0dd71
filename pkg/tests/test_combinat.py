from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from brionhopf.combinat import (
    binary_search_labeling,
    block_insertions,
    catalan,
    compositions,
    concatenate,
    enumerate_trees,
    inorder_paths,
    left_comb,
    loday_vertex,
    maximal_intervals,
    multinomial,
    near_concatenate,
    right_comb,
    split_composition,
    tree_from_string,
    tree_size,
    tree_to_string,
)


def test_block_insertions_examples():
    assert block_insertions("a", "b") == [("b", "a"), ("a", "b")]
    assert block_insertions("12", "34") == [("3", "4", "1", "2"), ("1", "3", "4", "2"), ("1", "2", "3", "4")]
    assert len(block_insertions("abcd", "xy")) == 5
    with pytest.raises(ValueError):
        block_insertions("ab", "bc")


@given(st.integers(1, 5), st.integers(1, 4))
def test_block_insertions_restrict_correctly(s, t):
    ell = [f"l{i}" for i in range(s)]
    m = [f"m{i}" for i in range(t)]
    out = block_insertions(ell, m)
    assert len(set(out)) == s + 1
    for order in out:
        assert [x for x in order if x in ell] == ell
        assert maximal_intervals(order, set(m)) == [tuple(m)]


def test_composition_joins():
    assert concatenate((2,), (1,)) == (2, 1)
    assert concatenate((1, 2), (2, 1)) == (1, 2, 2, 1)
    assert concatenate((1, 2), ()) == (1, 2)
    assert near_concatenate((2,), (1,)) == (3,)
    assert near_concatenate((1, 2), (2, 1)) == (1, 4, 1)
    assert near_concatenate((1,), (1,)) == (2,)


def test_split_composition_examples():
    a = split_composition((2, 3), 2)
    assert (a.left, a.right, a.near) == ((2,), (3,), False)
    b = split_composition((2, 3), 4)
    assert (b.left, b.right, b.near) == ((2, 2), (1,), True)
    c = split_composition((3,), 1)
    assert (c.left, c.right, c.near) == ((1,), (2,), True)
    for bad in (0, 5):
        with pytest.raises(ValueError):
            split_composition((2, 3), bad)


def test_split_then_join_is_identity_up_to_12():
    for n in range(2, 13):
        for alpha in compositions(n):
            for s in range(1, n):
                cut = split_composition(alpha, s)
                assert sum(cut.left) == s
                assert cut.join() == alpha


def test_compositions_and_multinomials():
    assert [len(compositions(n)) for n in range(1, 7)] == [1, 2, 4, 8, 16, 32]
    assert multinomial((1, 2)) == 3
    assert multinomial((2, 2, 1)) == 30


def test_tree_counts_match_catalan():
    assert [catalan(n) for n in range(11)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    for n in range(1, 13):
        trees = enumerate_trees(n)
        assert len(trees) == catalan(n)
        assert len(set(trees)) == len(trees)
        assert all(tree_size(t) == n for t in trees)


def test_binary_search_labeling():
    assert binary_search_labeling(left_comb(1), "a") == {"": "a"}
    labels = binary_search_labeling(left_comb(3), "123")
    assert labels["LL"] == "1" and labels[""] == "3"
    for tree in enumerate_trees(4):
        lab = binary_search_labeling(tree, "wxyz")
        assert [lab[p] for p in inorder_paths(tree)] == list("wxyz")


def test_loday_vertex():
    assert loday_vertex(left_comb(1), "1") == {"1": 1}
    assert loday_vertex(tree_from_string("(()())()"), "1234") == {"1": 2, "2": 1, "3": 6, "4": 1}
    for n in range(1, 9):
        for tree in enumerate_trees(n):
            assert sum(loday_vertex(tree, range(1, n + 1)).values()) == comb(n + 1, 2)


def test_tree_strings_round_trip():
    assert tree_to_string(None) == ""
    assert tree_to_string(right_comb(2)) == "()()"
    assert tree_to_string(left_comb(2)) == "(())"
    for n in range(1, 7):
        for tree in enumerate_trees(n):
            assert tree_from_string(tree_to_string(tree)) == tree
    for bad in ("(", ")", "(()", "a"):
        with pytest.raises(ValueError):
            tree_from_string(bad)
