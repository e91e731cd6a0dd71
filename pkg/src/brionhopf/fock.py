"""Fock functor: isomorphism classes, graded Brion maps and their duals.

Unlabeled classes: ``π_n`` and ``a_n`` are determined by ``n``; ``O_λ`` by the
composition; posets by their canonical form. The closed coefficient formulas
here are tested against unlabeling the labeled species computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Any, Iterable, Sequence

from .combinat import BinaryTree, catalan, composition, compositions, enumerate_trees, multinomial
from .core import FormalSum, register_key_type
from .dual import DualElement, dual_product_bruteforce, dual_product_formula, star
from .hopf import Element, assoc, brion, orbit, perm
from .posets import (
    Poset,
    UnlabeledPoset,
    canonical_form,
    chain_from_order,
    is_connected,
    maximal_count,
    rbt_poset,
    standard_layered_poset,
    symmetric_count,
)

FOCK_KINDS = ("perm", "assoc", "orbit")
TARGETS = {"perm": "perm", "assoc": "assoc", "orbit": "orbit", "Π": "perm", "A": "assoc", "OP": "orbit"}
CATALAN_BOUND = 10


def _atom_key(kind: str, atom) -> tuple:
    if kind == "poset":
        return atom.sort_key()
    if kind == "orbit":
        return (sum(atom), atom)
    return (atom,)


@dataclass(frozen=True)
class UnlabeledElement:
    """A multiset of atomic classes, optionally the dual functional."""

    kind: str
    atoms: tuple
    dual: bool = False

    @classmethod
    def build(cls, kind: str, atoms: Iterable[Any], dual: bool = False) -> "UnlabeledElement":
        return cls(kind, tuple(sorted(atoms, key=lambda a: _atom_key(kind, a))), dual)

    @property
    def grade(self) -> int:
        if self.kind == "orbit":
            return sum(sum(a) for a in self.atoms)
        if self.kind == "poset":
            return sum(a.size for a in self.atoms)
        return sum(self.atoms)

    def sort_key(self):
        return (self.kind, self.dual, self.grade, len(self.atoms), tuple(_atom_key(self.kind, a) for a in self.atoms))

    def _atom_text(self, atom) -> str:
        if self.kind == "perm":
            return f"π_{atom}"
        if self.kind == "assoc":
            return f"a_{atom}"
        if self.kind == "orbit":
            return "O_(" + ",".join(map(str, atom)) + ")"
        return atom.to_text()

    def to_text(self) -> str:
        body = "×".join(self._atom_text(a) for a in self.atoms) or "1"
        if not self.dual:
            return body
        return f"({body})*" if len(self.atoms) > 1 else body + "*"

    __str__ = to_text

    def to_json(self) -> dict:
        atoms = [a.to_json() if self.kind == "poset" else (list(a) if self.kind == "orbit" else a) for a in self.atoms]
        return {"type": "unlabeled", "kind": self.kind, "atoms": atoms, "dual": self.dual}

    @classmethod
    def from_json(cls, data: dict) -> "UnlabeledElement":
        kind = data["kind"]
        if kind == "poset":
            atoms = [UnlabeledPoset.from_json(a) for a in data["atoms"]]
        elif kind == "orbit":
            atoms = [composition(a) for a in data["atoms"]]
        else:
            atoms = [int(a) for a in data["atoms"]]
        return cls.build(kind, atoms, bool(data.get("dual", False)))


register_key_type("unlabeled", UnlabeledElement.from_json)


def perm_class(*sizes: int, dual: bool = False) -> UnlabeledElement:
    return UnlabeledElement.build("perm", sizes, dual)


def assoc_class(*sizes: int, dual: bool = False) -> UnlabeledElement:
    return UnlabeledElement.build("assoc", sizes, dual)


def orbit_class(*lams: Sequence[int], dual: bool = False) -> UnlabeledElement:
    return UnlabeledElement.build("orbit", (composition(l) for l in lams), dual)


# -- unlabeling ------------------------------------------------------------------------
def unlabel_key(key: Any) -> Any:
    """Isomorphism class of a labeled key (poset, element, dual, or tensor of them)."""
    if isinstance(key, tuple):
        return tuple(unlabel_key(k) for k in key)
    if isinstance(key, Poset):
        return canonical_form(key)
    if isinstance(key, DualElement):
        return _unlabel_element(key.element, dual=True)
    if isinstance(key, Element):
        return _unlabel_element(key, dual=False)
    raise TypeError(f"cannot unlabel {type(key).__name__}")


def _unlabel_element(x: Element, dual: bool) -> UnlabeledElement:
    if x.kind == "perm":
        atoms = [len(a) for a in x.atoms]
    elif x.kind == "assoc":
        atoms = [len(a) for a in x.atoms]
    elif x.kind == "orbit":
        atoms = [lam for _, lam in x.atoms]
    else:
        atoms = [canonical_form(a) for a in x.atoms]
    return UnlabeledElement.build(x.kind, atoms, dual)


def unlabel(s: FormalSum) -> FormalSum:
    """Replace each labeled term by its isomorphism class, summing coefficients."""
    return s.map_keys(unlabel_key)


# -- RBT classes -----------------------------------------------------------------------
def _shape(tree: BinaryTree) -> str:
    """Canonical string of the tree with left and right forgotten."""
    if tree is None:
        return ""
    kids = sorted(_shape(t) for t in tree if t is not None)
    return "(" + "".join(kids) + ")"


@lru_cache(maxsize=None)
def rbt_classes(n: int) -> tuple[UnlabeledPoset, ...]:
    """``RBT_n``: isomorphism classes of posets ``p_ℓ(T)`` over ``T ∈ Y_n``."""
    order = [str(i) for i in range(1, n + 1)]
    reps: dict[str, BinaryTree] = {}
    for tree in enumerate_trees(n):
        reps.setdefault(_shape(tree), tree)
    classes = {canonical_form(rbt_poset(t, order)) for t in reps.values()}
    return tuple(sorted(classes, key=lambda c: c.sort_key()))


@lru_cache(maxsize=None)
def rbt_weight(p: UnlabeledPoset) -> int:
    """``2^{n − m(p) − s(p)}``."""
    q = p.to_poset()
    return 2 ** (p.size - maximal_count(q) - symmetric_count(q))


def is_totally_symmetric(p: UnlabeledPoset) -> bool:
    """Every element is maximal or symmetric, i.e. ``n − m(p) − s(p) = 0``.

    Having zero or two upper covers everywhere is necessary but not enough:
    the two upsets above each branching element must also be isomorphic.
    """
    return rbt_weight(p) == 1


def totally_symmetric_count(n: int) -> int:
    return sum(1 for p in rbt_classes(n) if is_totally_symmetric(p))


# -- Brion at Fock level ---------------------------------------------------------------
def chain_class(n: int) -> UnlabeledPoset:
    return canonical_form(chain_from_order(range(1, n + 1)))


def layered_class(lam: Sequence[int]) -> UnlabeledPoset:
    return canonical_form(standard_layered_poset(lam))


def brion_fock(x: UnlabeledElement) -> FormalSum:
    """Closed formulas on atoms: ``n!·c_n``, ``Σ 2^{n−m−s} p``, ``multinomial·p(λ)``."""
    if x.dual or len(x.atoms) != 1 or x.kind not in FOCK_KINDS:
        raise ValueError("brion_fock takes a single atomic class of perm, assoc or orbit")
    (atom,) = x.atoms
    if x.kind == "perm":
        return FormalSum.single(chain_class(atom), factorial(atom))
    if x.kind == "assoc":
        return FormalSum((p, rbt_weight(p)) for p in rbt_classes(atom))
    return FormalSum.single(layered_class(atom), multinomial(atom))


def representative(x: UnlabeledElement) -> Element:
    """A labeled element on ``1..n`` in the class ``x``."""
    atoms, start = [], 1
    for a in x.atoms:
        size = sum(a) if x.kind == "orbit" else (a.size if x.kind == "poset" else a)
        labels = [str(i) for i in range(start, start + size)]
        start += size
        if x.kind == "perm":
            atoms.extend(perm(labels).atoms)
        elif x.kind == "assoc":
            atoms.extend(assoc(labels).atoms)
        elif x.kind == "orbit":
            atoms.extend(orbit((a, labels)).atoms)
        else:
            atoms.append(a.to_poset().relabel({str(i + 1): l for i, l in enumerate(labels)}))
    return Element.build(x.kind, atoms)


def brion_fock_species(x: UnlabeledElement) -> FormalSum:
    """Unlabel the species-level Brion image of a representative."""
    return unlabel(brion(representative(x)))


# -- Catalan ---------------------------------------------------------------------------
def _check_catalan_bound(n: int, bound: int) -> None:
    if not 1 <= n <= bound:
        raise ValueError(f"n must lie in 1..{bound}")


def verify_catalan(n: int, bound: int = CATALAN_BOUND) -> bool:
    """``C_n = Σ_{p ∈ RBT_n} 2^{n−m(p)−s(p)}``."""
    _check_catalan_bound(n, bound)
    return sum(rbt_weight(p) for p in rbt_classes(n)) == catalan(n)


def verify_catalan_parity(n: int, bound: int = CATALAN_BOUND) -> bool:
    """``C_n`` odd ⇔ odd number of totally symmetric RBT posets ⇔ ``n = 2^k − 1``."""
    _check_catalan_bound(n, bound)
    odd = catalan(n) % 2 == 1
    symmetric = totally_symmetric_count(n) % 2 == 1
    mersenne = (n + 1) & n == 0
    return odd == symmetric == mersenne


# -- dual products and the Witt bracket --------------------------------------------------
def dual_product_fock(s: int, t: int) -> FormalSum:
    """``a*_s · a*_t = (s+1) a*_{s+t} + (a_s × a_t)*``."""
    if s < 1 or t < 1:
        raise ValueError("grades must be positive")
    return FormalSum([(assoc_class(s + t, dual=True), s + 1), (assoc_class(s, t, dual=True), 1)])


def _representative_pair(s: int, t: int) -> tuple[DualElement, DualElement]:
    left = [str(i) for i in range(1, s + 1)]
    right = [str(i) for i in range(s + 1, s + t + 1)]
    return star(assoc(left)), star(assoc(right))


def dual_product_fock_species(s: int, t: int, bruteforce: bool = False) -> FormalSum:
    """Unlabel the labeled dual product of representatives of ``a_s`` and ``a_t``."""
    x, y = _representative_pair(s, t)
    labeled = dual_product_bruteforce(x, y) if bruteforce else dual_product_formula(x, y)
    return unlabel(labeled)


def witt_bracket(s: int, t: int) -> FormalSum:
    """``[a*_s, a*_t]`` from the Fock dual product; product classes must cancel."""
    out = dual_product_fock(s, t) - dual_product_fock(t, s)
    if any(len(k.atoms) > 1 for k in out.keys()):
        raise AssertionError("product classes failed to cancel")
    return out


def witt_bracket_species(s: int, t: int, bruteforce: bool = True) -> FormalSum:
    return dual_product_fock_species(s, t, bruteforce) - dual_product_fock_species(t, s, bruteforce)


def witt_expected(s: int, t: int) -> FormalSum:
    return FormalSum.single(assoc_class(s + t, dual=True), s - t)


# -- dual Brion maps -------------------------------------------------------------------
def is_chain(p: Poset) -> bool:
    n = len(p)
    return len(p.relations()) == n * (n - 1) // 2


def layered_composition(p: Poset) -> tuple[int, ...] | None:
    """``λ`` with ``p ≅ p(λ)``, or ``None``.

    Level of an element = length of the longest chain below it. ``p`` is
    layered iff every cover joins consecutive levels and all such covers exist.
    """
    level: dict[str, int] = {}
    for x in sorted(p.ground, key=lambda y: len(p.below(y))):
        level[x] = max((level[y] + 1 for y in p.lower_covers(x)), default=0)
    if not level:
        return None
    depth = max(level.values()) + 1
    blocks = [[x for x in p.ground if level[x] == k] for k in range(depth)]
    expected = {(a, b) for k in range(depth - 1) for a in blocks[k] for b in blocks[k + 1]}
    if set(p.covers) != expected:
        return None
    return tuple(len(b) for b in blocks)


def dual_brion(p: UnlabeledPoset, target: str) -> FormalSum:
    """``B*_X(p*)`` for connected ``p``; zero unless ``p`` has the family's shape."""
    kind = TARGETS.get(target)
    if kind is None:
        raise ValueError(f"unknown target {target!r}")
    q = p.to_poset()
    if not is_connected(q) or p.size == 0:
        raise ValueError("dual Brion maps are taken on duals of connected posets")
    n = p.size
    if kind == "perm":
        if is_chain(q):
            return FormalSum.single(perm_class(n, dual=True), factorial(n))
        return FormalSum()
    if kind == "assoc":
        if p in rbt_classes(n):
            return FormalSum.single(assoc_class(n, dual=True), rbt_weight(p))
        return FormalSum()
    lam = layered_composition(q)
    if lam is None:
        return FormalSum()
    return FormalSum.single(orbit_class(lam, dual=True), multinomial(lam))


def fock_atoms(kind: str, n: int) -> list[UnlabeledElement]:
    """Atomic classes of grade ``n``."""
    if kind == "perm":
        return [perm_class(n)]
    if kind == "assoc":
        return [assoc_class(n)]
    return [orbit_class(lam) for lam in compositions(n) if len(lam) > 1 or n == 1]
