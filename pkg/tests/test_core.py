from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brionhopf.core import (
    Decomposition,
    FormalSum,
    as_ground,
    decomposition,
    enumerate_decompositions,
    enumerate_triple_decompositions,
    format_sum,
    label_key,
    ordered,
    set_partitions,
)
from brionhopf.hopf import perm
from brionhopf.posets import Poset

coeffs = st.fractions(max_denominator=50).filter(lambda c: abs(c) < 1000)
sums = st.dictionaries(st.sampled_from("xyzw"), coeffs, max_size=4).map(FormalSum)


def test_cancellation_and_fractions():
    assert FormalSum.single("x", 2) + FormalSum.single("x", -2) == FormalSum()
    assert FormalSum.single("x", Fraction(1, 2)) + FormalSum.single("x", Fraction(1, 2)) == FormalSum.single("x")
    assert len(FormalSum.single("x") + FormalSum.single("y")) == 2


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        FormalSum.single("x", 0.5)


def test_mismatched_grounds_are_rejected():
    with pytest.raises(ValueError):
        FormalSum.single(perm("ab")) + FormalSum.single(perm("abc"))
    with pytest.raises(ValueError):
        FormalSum([(Poset("a"), 1), (Poset("b"), 1)])


@given(sums, sums, sums)
def test_addition_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == FormalSum()


@given(sums, sums, coeffs, coeffs)
def test_scalars_distribute(a, b, r, s):
    assert (a + b) * r == a * r + b * r
    assert a * (r + s) == a * r + a * s


@given(sums)
def test_json_round_trip_is_lossless(a):
    assert FormalSum.from_json(json.loads(json.dumps(a.to_json()))) == a


def test_json_round_trip_for_structured_keys():
    s = FormalSum([(Poset("ab", [("a", "b")]), Fraction(-3, 7)), (Poset("ab"), 5)])
    assert FormalSum.from_json(json.loads(json.dumps(s.to_json()))) == s


def test_decompositions():
    assert enumerate_decompositions("a") == [Decomposition(frozenset(), as_ground("a")), Decomposition(as_ground("a"), frozenset())]
    assert len(enumerate_decompositions("abc")) == 8
    assert enumerate_decompositions("") == [Decomposition(frozenset(), frozenset())]
    assert len(list(enumerate_triple_decompositions("abcd"))) == 81
    with pytest.raises(ValueError):
        decomposition("ab", "c")


def test_set_partitions_are_counted_by_bell_numbers():
    assert [len(list(set_partitions(range(n)))) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_natural_label_order():
    assert ordered(["10", "2", "b", "1", "a"]) == ("1", "2", "10", "a", "b")
    assert label_key("3") < label_key("a")


def test_format_sum():
    assert format_sum(FormalSum()) == "0"
    assert format_sum(FormalSum([("x", 2), ("y", -1), ("z", Fraction(1, 3))])) == "2·x - y + 1/3·z"
