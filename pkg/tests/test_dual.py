from __future__ import annotations

import pytest

from brionhopf.core import FormalSum, decomposition, enumerate_decompositions
from brionhopf.dual import (
    DualElement,
    check_cocommutativity,
    check_dual_products,
    check_lie_axioms,
    check_primitives,
    dual,
    dual_coproduct,
    dual_product_bruteforce,
    dual_product_formula,
    is_primitive,
    lie_bracket,
    lie_bracket_closed,
    orbit_bracket_compositions,
    star,
)
from brionhopf.hopf import assoc, orbit, perm, poset_element, unit
from brionhopf.posets import Poset


def test_perm_dual_product():
    out = dual_product_formula(star(perm("a")), star(perm("b")))
    assert out == dual(perm("ab")) + dual(perm("a", "b"))
    assert dual_product_bruteforce(star(perm("a")), star(perm("b"))) == out


def test_assoc_dual_product():
    out = dual_product_formula(star(assoc("1")), star(assoc("2")))
    assert out == dual(assoc("12")) + dual(assoc("21")) + dual(assoc("1", "2"))
    big = dual_product_bruteforce(star(assoc("12")), star(assoc("3")))
    assert len(big) == 4


def test_orbit_dual_product():
    # two points: O_(1,1) and the point O_(2), which is the product of the two points
    out = dual_product_formula(star(orbit(((1,), "a"))), star(orbit(((1,), "b"))))
    assert out == dual(orbit(((1, 1), "ab"))) + dual(orbit(((2,), "ab")))
    # one multi-part factor already gives three terms
    out = dual_product_formula(star(orbit(((1, 1), "ab"))), star(orbit(((1,), "c"))))
    assert out == dual(orbit(((1, 1, 1), "abc"))) + dual(orbit(((1, 2), "abc"))) + dual(orbit(((1, 1), "ab"), ((1,), "c")))
    assert dual_product_bruteforce(star(orbit(((1, 1), "ab"))), star(orbit(((1,), "c")))) == out


def test_closed_formula_requires_atoms():
    with pytest.raises(ValueError):
        dual_product_formula(star(perm("a", "b")), star(perm("c")))
    with pytest.raises(ValueError):
        dual_product_formula(star(perm("a")), star(assoc("b")))


@pytest.mark.parametrize("kind", ["perm", "assoc", "orbit"])
def test_formula_matches_bruteforce(kind):
    report = check_dual_products(kind, 4)
    assert report.passed and report.checked > 0


def test_bruteforce_bound():
    with pytest.raises(ValueError):
        dual_product_bruteforce(star(perm("abc")), star(perm("def")))


def test_dual_coproduct():
    z = star(perm("abc"))
    assert dual_coproduct(z, decomposition("abc", "a")) == FormalSum()
    w = star(perm("a", "bc"))
    assert dual_coproduct(w, decomposition("abc", "a")) == FormalSum.single((star(perm("a")), star(perm("bc"))))
    assert dual_coproduct(w, decomposition("abc", "")) == FormalSum.single((star(unit("perm")), w))


def test_primitives():
    assert is_primitive(star(perm("abcd")))
    assert not is_primitive(star(perm("ab", "cd")))
    assert is_primitive(star(assoc("3142")))
    assert is_primitive(star(orbit(((2, 1), "abc"))))
    assert is_primitive(star(poset_element(Poset("abc", [("a", "b"), ("a", "c")]))))
    assert not is_primitive(star(poset_element(Poset("abc", [("a", "b")]))))
    # a single-part orbit class is a point, hence a product of points
    assert not is_primitive(star(orbit(((2,), "ab"))))
    for kind in ("perm", "assoc", "orbit", "poset"):
        assert check_primitives(kind, 3).passed
        assert check_cocommutativity(kind, 3).passed


def test_brackets():
    assert lie_bracket(star(perm("ab")), star(perm("c"))) == FormalSum()
    assert lie_bracket(star(assoc("1")), star(assoc("2"))) == FormalSum()
    out = lie_bracket(star(assoc("12")), star(assoc("3")))
    # insertions of 3 into 12 are 312, 132, 123; of 12 into 3 are 123, 312
    assert out == dual(assoc("132"))
    assert out == lie_bracket_closed(star(assoc("12")), star(assoc("3")))
    assert orbit_bracket_compositions((2,), (1,)) == FormalSum([((2, 1), 1), ((1, 2), -1)])
    out = lie_bracket(star(orbit(((1, 1), "ab"))), star(orbit(((1,), "c"))))
    assert out == dual(orbit(((1, 2), "abc"))) - dual(orbit(((2, 1), "abc")))


@pytest.mark.parametrize("kind", ["perm", "assoc", "orbit"])
def test_lie_axioms(kind):
    report = check_lie_axioms(kind, 4)
    assert report.passed and report.checked > 0


def test_poset_products_by_bruteforce():
    a = star(poset_element(Poset("a")))
    b = star(poset_element(Poset("b")))
    out = dual_product_bruteforce(a, b)
    # z with Δ_{a,b}(z) = a ⊗ b: {a} must be a lower set, so the antichain and a<b
    assert out == dual(poset_element(Poset("ab"))) + dual(poset_element(Poset("ab", [("a", "b")])))
    assert all(isinstance(k, DualElement) for k in out.keys())
    assert len(enumerate_decompositions("ab")) == 4
