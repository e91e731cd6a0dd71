from __future__ import annotations

import pytest

from brionhopf.combinat import catalan, compositions
from brionhopf.core import FormalSum
from brionhopf.fock import (
    assoc_class,
    brion_fock,
    brion_fock_species,
    chain_class,
    dual_brion,
    dual_product_fock,
    dual_product_fock_species,
    is_totally_symmetric,
    layered_class,
    layered_composition,
    orbit_class,
    perm_class,
    rbt_classes,
    rbt_weight,
    totally_symmetric_count,
    unlabel,
    verify_catalan,
    verify_catalan_parity,
    witt_bracket,
    witt_bracket_species,
    witt_expected,
)
from brionhopf.hopf import assoc, brion, perm
from brionhopf.posets import Poset, antichain, canonical_form, disjoint_union, standard_layered_poset

V3 = canonical_form(Poset("abc", [("a", "b"), ("a", "c")]))


def test_unlabel():
    assert unlabel(brion(perm("abc"))) == FormalSum.single(chain_class(3), 6)
    x = brion(assoc("123"))
    assert unlabel(x + brion(assoc("231"))) == unlabel(x) * 2
    assert unlabel(x) == FormalSum([(chain_class(3), 4), (V3, 1)])


def test_brion_fock_examples():
    assert brion_fock(perm_class(3)) == FormalSum.single(chain_class(3), 6)
    assert brion_fock(assoc_class(3)) == FormalSum([(chain_class(3), 4), (V3, 1)])
    assert brion_fock(orbit_class((1, 2))) == FormalSum.single(layered_class((1, 2)), 3)
    with pytest.raises(ValueError):
        brion_fock(perm_class(1, 2))


def test_functoriality_on_atoms():
    for n in range(1, 6):
        assert brion_fock_species(perm_class(n)) == brion_fock(perm_class(n))
        assert brion_fock_species(assoc_class(n)) == brion_fock(assoc_class(n))
        for lam in compositions(n):
            assert brion_fock_species(orbit_class(lam)) == brion_fock(orbit_class(lam))


def test_catalan():
    assert verify_catalan(1) and verify_catalan(3) and verify_catalan(4)
    assert len(rbt_classes(4)) == 3
    assert sum(rbt_weight(p) for p in rbt_classes(4)) == catalan(4) == 14
    with pytest.raises(ValueError):
        verify_catalan(11)


def test_catalan_parity():
    assert all(verify_catalan_parity(n) for n in range(1, 11))
    assert [totally_symmetric_count(n) for n in range(1, 9)] == [1, 0, 1, 0, 0, 0, 1, 0]
    # five nodes, every node with zero or two children, but the two branches differ
    lopsided = canonical_form(Poset("abcde", [("a", "b"), ("a", "c"), ("c", "d"), ("c", "e")]))
    assert lopsided in rbt_classes(5) and not is_totally_symmetric(lopsided)


def test_witt():
    assert dual_product_fock(1, 2) == FormalSum([(assoc_class(3, dual=True), 2), (assoc_class(1, 2, dual=True), 1)])
    assert dual_product_fock(1, 1) == FormalSum([(assoc_class(2, dual=True), 2), (assoc_class(1, 1, dual=True), 1)])
    assert dual_product_fock_species(1, 2) == dual_product_fock(1, 2)
    assert dual_product_fock_species(2, 2, bruteforce=True) == dual_product_fock(2, 2)
    assert witt_bracket(1, 2) == FormalSum.single(assoc_class(3, dual=True), -1)
    assert witt_bracket(3, 3) == FormalSum()
    assert witt_bracket(3, 1) == FormalSum.single(assoc_class(4, dual=True), 2)
    assert witt_bracket_species(2, 3) == witt_expected(2, 3)


def test_dual_brion():
    c3 = chain_class(3)
    assert dual_brion(c3, "perm") == FormalSum.single(perm_class(3, dual=True), 6)
    assert dual_brion(c3, "assoc") == FormalSum.single(assoc_class(3, dual=True), 4)
    assert dual_brion(c3, "orbit") == FormalSum.single(orbit_class((1, 1, 1), dual=True), 6)
    assert dual_brion(layered_class((1, 2)), "OP") == FormalSum.single(orbit_class((1, 2), dual=True), 3)
    assert dual_brion(V3, "perm") == FormalSum()
    with pytest.raises(ValueError):
        dual_brion(canonical_form(antichain("ab")), "perm")
    with pytest.raises(ValueError):
        dual_brion(c3, "poset")


def test_layered_recovery():
    assert layered_composition(standard_layered_poset((3, 1, 2))) == (3, 1, 2)
    assert layered_composition(Poset("abc", [("a", "b")])) is None
    assert layered_composition(disjoint_union(Poset("a"), Poset("b"))) == (2,)
