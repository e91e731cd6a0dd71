from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from brionhopf.core import Decomposition, FormalSum, decomposition, enumerate_decompositions
from brionhopf.geometry import brion_geometric
from brionhopf.hopf import (
    Element,
    assoc,
    atoms,
    basis,
    brion,
    check_brion_morphism,
    check_coassociativity,
    check_compatibility,
    check_unitality,
    coproduct,
    orbit,
    perm,
    poset_element,
    product_elements,
    realize,
    unit,
)
from brionhopf.posets import Poset, chain_from_order, is_connected
from brionhopf.verify import random_element


def test_products_are_unordered_unions():
    assert product_elements(perm("ab"), perm("c")) == perm("ab", "c")
    assert assoc("12") * assoc("34") == assoc("34") * assoc("12")
    p = poset_element(chain_from_order("ab"))
    assert p * unit("poset") == p
    with pytest.raises(ValueError):
        perm("ab") * perm("bc")
    with pytest.raises(ValueError):
        perm("a") * assoc("b")


def test_assoc_coproduct_example():
    out = coproduct(assoc("1234"), decomposition("1234", "2"))
    assert out == FormalSum.single((assoc("2"), assoc("1", "34")))


def test_perm_coproduct_is_always_one_tensor():
    for d in enumerate_decompositions("abcd"):
        left = perm(d.S) if d.S else unit("perm")
        right = perm(d.T) if d.T else unit("perm")
        assert coproduct(perm("abcd"), d) == FormalSum.single((left, right))


def test_orbit_coproduct_splits_the_composition():
    x = orbit(((2, 3), "abcde"))
    assert coproduct(x, decomposition("abcde", "ab")) == FormalSum.single((orbit(((2,), "ab")), orbit(((3,), "cde"))))
    assert coproduct(x, decomposition("abcde", "abcd")) == FormalSum.single((orbit(((2, 2), "abcd")), orbit(((1,), "e"))))


def test_single_part_orbit_classes_are_points():
    assert orbit(((3,), "abc")) == orbit(((1,), "a"), ((1,), "b"), ((1,), "c"))
    assert not orbit(((3,), "abc")).is_atomic()
    assert orbit(((1, 2), "abc")).is_atomic()


def test_poset_coproduct_vanishes_off_lower_sets():
    p = poset_element(Poset("abc", [("a", "b")]))
    assert coproduct(p, decomposition("abc", "b")) == FormalSum()
    assert coproduct(p, decomposition("abc", "ac")) == FormalSum.single(
        (poset_element(Poset("ac")), poset_element(Poset("b")))
    )


def test_unitality_of_coproduct():
    for kind in ("perm", "assoc", "orbit", "poset"):
        assert check_unitality(kind, 3).passed


def test_brion_examples():
    assert brion(perm("ab")) == FormalSum([(chain_from_order("ab"), 1), (chain_from_order("ba"), 1)])
    assert len(brion(assoc("abc"))) == 5
    assert len(brion(orbit(((1, 2), "123")))) == 3
    assert brion(unit("perm")) == FormalSum.single(Poset(()))
    with pytest.raises(TypeError):
        brion(poset_element(Poset("a")))


def test_brion_term_counts():
    from math import factorial

    from brionhopf.combinat import catalan, compositions, multinomial

    for n in range(1, 6):
        labels = [str(i) for i in range(1, n + 1)]
        image = brion(perm(labels))
        assert len(image) == factorial(n) and set(image.coefficients()) == {1}
        assert len(brion(assoc(labels))) == catalan(n)
        for lam in compositions(n):
            assert len(brion(orbit((lam, labels)))) == multinomial(lam)


def test_brion_agrees_with_the_oracle_on_products():
    for x in (perm("ab", "cd"), assoc("ba", "c"), orbit(((1, 2), "abc"), ((1,), "d"))):
        assert brion_geometric(realize(x)) == brion(x)


def test_basis_sizes():
    assert [len(basis("perm", range(n))) for n in range(1, 6)] == [1, 2, 5, 15, 52]
    # sum over set partitions of the product of block factorials
    assert [len(basis("assoc", range(n))) for n in range(1, 5)] == [1, 3, 13, 73]
    assert [len(basis("poset", range(n))) for n in range(1, 5)] == [1, 3, 19, 219]
    assert all(is_connected(a.to_poset()) for a in atoms("poset", "1234"))
    assert len(atoms("orbit", "1234")) == 7


@pytest.mark.parametrize("kind", ["perm", "assoc", "orbit", "poset"])
def test_axioms_small(kind):
    assert check_coassociativity(kind, 3).passed
    assert check_compatibility(kind, 3).passed


@pytest.mark.parametrize("kind", ["perm", "assoc", "orbit"])
def test_brion_morphism_small(kind):
    report = check_brion_morphism(kind, 3)
    assert report.passed and report.checked > 0


def test_check_bounds():
    with pytest.raises(ValueError):
        check_coassociativity("perm", 6)
    with pytest.raises(ValueError):
        check_brion_morphism("poset", 2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["perm", "assoc", "orbit"]), st.randoms(use_true_random=False))
def test_json_round_trip(kind, rng):
    x = random_element(rng, kind, list("abcde"))
    assert Element.from_json(json.loads(json.dumps(x.to_json()))) == x


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["perm", "assoc", "orbit"]), st.randoms(use_true_random=False))
def test_coproduct_is_natural_under_relabeling(kind, rng):
    labels = list("abcde")
    x = random_element(rng, kind, labels)
    shuffled = labels[:]
    rng.shuffle(shuffled)
    sigma = dict(zip(labels, shuffled))
    S = frozenset(l for l in labels if rng.random() < 0.5)
    d = Decomposition(S, frozenset(labels) - S)
    moved = Decomposition(frozenset(sigma[l] for l in d.S), frozenset(sigma[l] for l in d.T))
    image = coproduct(x, d).map_keys(lambda t: (t[0].relabel(sigma), t[1].relabel(sigma)))
    assert coproduct(x.relabel(sigma), moved) == image
