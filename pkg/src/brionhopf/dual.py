"""Dual Hopf monoids: dual products, dual coproducts, primitives, Lie brackets.

The dual product is ``μ*(x* ⊗ y*) = Σ z*`` over basis elements ``z`` with
``Δ_{S,T}(z) = x ⊗ y``; the dual coproduct sums over factorizations
``μ(x ⊗ y) = z``. Closed formulas for atomic inputs are checked against
brute-force dualization over the whole basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .combinat import Composition, block_insertions, concatenate, near_concatenate
from .core import Decomposition, FormalSum, enumerate_decompositions, ordered, register_key_type
from .hopf import (
    GEOMETRIC_KINDS,
    MONOIDS,
    Element,
    Report,
    _ground_labels,
    atoms,
    basis,
    coproduct,
    product_elements,
)

BRUTEFORCE_BOUND = 5


@dataclass(frozen=True)
class DualElement:
    """The dual basis functional ``z*``."""

    element: Element

    @property
    def kind(self) -> str:
        return self.element.kind

    @property
    def ground(self) -> frozenset:
        return self.element.ground

    def is_atomic(self) -> bool:
        return self.element.is_atomic()

    def sort_key(self):
        return self.element.sort_key()

    def to_text(self) -> str:
        text = self.element.to_text()
        return f"({text})*" if "×" in text else text + "*"

    __str__ = to_text

    def to_json(self) -> dict:
        return {"type": "dual", "element": self.element.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "DualElement":
        return cls(Element.from_json(data["element"]))


register_key_type("dual", DualElement.from_json)


def star(x: Element) -> DualElement:
    return DualElement(x)


def dual(x: Element) -> FormalSum:
    return FormalSum.single(DualElement(x))


def _check_pair(x: DualElement, y: DualElement) -> None:
    if x.kind != y.kind:
        raise ValueError(f"cannot multiply {x.kind}* by {y.kind}*")
    if x.ground & y.ground:
        raise ValueError("dual product of elements on overlapping ground sets")


def _check_atomic(x: DualElement, y: DualElement) -> None:
    if not (x.is_atomic() and y.is_atomic()):
        raise ValueError("closed dual-product formulas are stated for single-factor elements")


# -- dual products -------------------------------------------------------------------
def _orbit_atom(block: frozenset, lam: Composition) -> Element:
    return Element.build("orbit", [(block, lam)])


def dual_product_formula(x: DualElement, y: DualElement) -> FormalSum:
    """Closed formula for ``x* · y*`` with ``x`` on ``S`` and ``y`` on ``T`` atomic.

    * perm:  ``π*_{S⊔T} + (π_S × π_T)*``
    * assoc: one ``a*_b`` per block insertion ``b`` of ``m`` into ``ℓ``, plus ``(a_ℓ × a_m)*``
    * orbit: ``O*_{α·β} + O*_{α⊙β}``, plus ``(O_α × O_β)*`` when ``α`` or ``β`` has more than one part
    """
    _check_pair(x, y)
    _check_atomic(x, y)
    kind = x.kind
    if kind not in GEOMETRIC_KINDS:
        raise ValueError("no closed dual-product formula for posets; use dual_product_bruteforce")
    (a,), (b,) = x.element.atoms, y.element.atoms
    terms = FormalSum.single(DualElement(product_elements(x.element, y.element)))
    if kind == "perm":
        return terms + dual(Element("perm", frozenset([a | b])))
    if kind == "assoc":
        for order in block_insertions(a, b):
            terms = terms + dual(Element("assoc", frozenset([order])))
        return terms
    (S, alpha), (T, beta) = a, b
    main = dual(_orbit_atom(S | T, concatenate(alpha, beta))) + dual(_orbit_atom(S | T, near_concatenate(alpha, beta)))
    if len(alpha) > 1 or len(beta) > 1:
        return main + terms
    return main


def dual_product_bruteforce(x: DualElement, y: DualElement) -> FormalSum:
    """Sum of ``z*`` over every basis element ``z`` on ``S ⊔ T`` with ``Δ_{S,T}(z) = x ⊗ y``."""
    _check_pair(x, y)
    ground = x.ground | y.ground
    if len(ground) > BRUTEFORCE_BOUND:
        raise ValueError(f"brute-force dual product limited to |I| <= {BRUTEFORCE_BOUND}")
    d = Decomposition(x.ground, y.ground)
    target = FormalSum.single((x.element, y.element))
    return FormalSum((DualElement(z), 1) for z in basis(x.kind, ground) if coproduct(z, d) == target)


def dual_product(x: DualElement, y: DualElement) -> FormalSum:
    """Closed formula when it applies, brute force otherwise."""
    if x.kind in GEOMETRIC_KINDS and x.is_atomic() and y.is_atomic():
        return dual_product_formula(x, y)
    return dual_product_bruteforce(x, y)


def dual_product_sums(a: FormalSum, b: FormalSum) -> FormalSum:
    out = FormalSum()
    for x, c in a.items():
        for y, e in b.items():
            out = out + dual_product(x, y) * (c * e)
    return out


# -- dual coproduct and primitives ------------------------------------------------------
def dual_coproduct(z: DualElement, d: Decomposition) -> FormalSum:
    """Sum of ``x* ⊗ y*`` over ``μ(x ⊗ y) = z``: at most one term, since factors never straddle."""
    if d.S | d.T != z.ground or d.S & d.T:
        raise ValueError("decomposition does not match the element's ground set")
    monoid = MONOIDS[z.kind]
    left, right = [], []
    for atom in z.element.atoms:
        g = monoid.ground(atom)
        if g <= d.S:
            left.append(atom)
        elif g <= d.T:
            right.append(atom)
        else:
            return FormalSum()
    x, y = Element(z.kind, frozenset(left)), Element(z.kind, frozenset(right))
    return FormalSum.single((DualElement(x), DualElement(y)))


def is_primitive(z: DualElement) -> bool:
    """``Δ*_{S,T}(z*) = 0`` for every nontrivial decomposition."""
    return all(not dual_coproduct(z, d) for d in enumerate_decompositions(z.ground) if not d.is_trivial())


# -- Lie brackets -----------------------------------------------------------------------
def lie_bracket(x: DualElement, y: DualElement) -> FormalSum:
    """``γ(x* ⊗ y*) = x*·y* − y*·x*`` for atomic primitives.

    The product term ``(x × y)*`` appears in both orders with the same
    structural key; its cancellation is asserted rather than assumed.
    """
    _check_atomic(x, y)
    out = dual_product(x, y) - dual_product(y, x)
    product_term = DualElement(product_elements(x.element, y.element))
    if product_term in out:
        raise AssertionError("product terms failed to cancel in the bracket")
    return out


def lie_bracket_sums(a: FormalSum, b: FormalSum) -> FormalSum:
    out = FormalSum()
    for x, c in a.items():
        for y, e in b.items():
            out = out + lie_bracket(x, y) * (c * e)
    return out


def lie_bracket_closed(x: DualElement, y: DualElement) -> FormalSum:
    """The bracket written directly from the closed product formulas."""
    _check_pair(x, y)
    _check_atomic(x, y)
    (a,), (b,) = x.element.atoms, y.element.atoms
    if x.kind == "perm":
        return FormalSum()
    if x.kind == "assoc":
        plus = FormalSum((DualElement(Element("assoc", frozenset([o]))), 1) for o in block_insertions(a, b))
        minus = FormalSum((DualElement(Element("assoc", frozenset([o]))), 1) for o in block_insertions(b, a))
        return plus - minus
    if x.kind == "orbit":
        (S, alpha), (T, beta) = a, b
        out = FormalSum()
        for lam, sign in orbit_bracket_compositions(alpha, beta).items():
            out = out + dual(_orbit_atom(S | T, lam)) * sign
        return out
    raise ValueError("no closed bracket for posets")


def orbit_bracket_compositions(alpha: Composition, beta: Composition) -> FormalSum:
    """``α·β − β·α + α⊙β − β⊙α`` as a formal sum of compositions."""
    return FormalSum(
        [
            (concatenate(alpha, beta), 1),
            (concatenate(beta, alpha), -1),
            (near_concatenate(alpha, beta), 1),
            (near_concatenate(beta, alpha), -1),
        ]
    )


# -- checks ---------------------------------------------------------------------------
def _atomic_duals(kind: str, ground: frozenset) -> list[DualElement]:
    return [DualElement(a) for a in atoms(kind, ground)]


def _atomic_pairs(kind: str, I: frozenset) -> Iterable[tuple[DualElement, DualElement]]:
    for S, T in enumerate_decompositions(I):
        if S and T:
            for x in _atomic_duals(kind, S):
                for y in _atomic_duals(kind, T):
                    yield x, y


def _sub_grounds(I: frozenset) -> list[frozenset]:
    labels = ordered(I)
    return [frozenset(x for i, x in enumerate(labels) if mask >> i & 1) for mask in range(1, 1 << len(labels))]


def check_dual_products(kind: str, ground: int | Iterable) -> Report:
    """Closed formula equals brute-force dualization on every atomic pair inside ``I``."""
    I = _ground_labels(ground)
    report = Report(f"dual-product[{kind}, |I|<={len(I)}]")
    for J in _sub_grounds(I):
        for x, y in _atomic_pairs(kind, J):
            report.record(
                dual_product_formula(x, y) == dual_product_bruteforce(x, y),
                lambda: f"{x} · {y}",
            )
    return report


def check_lie_axioms(kind: str, ground: int | Iterable) -> Report:
    """Antisymmetry on atomic pairs and Jacobi on atomic triples, plus the closed bracket."""
    I = _ground_labels(ground)
    report = Report(f"lie-axioms[{kind}, |I|<={len(I)}]")
    for J in _sub_grounds(I):
        for x, y in _atomic_pairs(kind, J):
            xy = lie_bracket(x, y)
            report.record(xy + lie_bracket(y, x) == FormalSum(), lambda: f"antisymmetry {x}, {y}")
            report.record(xy == lie_bracket_closed(x, y), lambda: f"closed bracket {x}, {y}")
            if kind == "perm":
                report.record(not xy, lambda: f"nonzero perm bracket {x}, {y}")
        if len(J) < 3:
            continue
        for parts in _three_blocks(J):
            for x in _atomic_duals(kind, parts[0]):
                for y in _atomic_duals(kind, parts[1]):
                    for z in _atomic_duals(kind, parts[2]):
                        X, Y, Z = (FormalSum.single(e) for e in (x, y, z))
                        cyclic = (
                            lie_bracket_sums(lie_bracket_sums(X, Y), Z)
                            + lie_bracket_sums(lie_bracket_sums(Y, Z), X)
                            + lie_bracket_sums(lie_bracket_sums(Z, X), Y)
                        )
                        report.record(not cyclic, lambda: f"Jacobi {x}, {y}, {z}")
    return report


def _three_blocks(J: frozenset) -> list[tuple[frozenset, frozenset, frozenset]]:
    """Ordered triples of nonempty blocks partitioning ``J``, one per unordered triple."""
    out = set()
    labels = ordered(J)
    for code in range(3 ** len(labels)):
        parts: tuple[list, list, list] = ([], [], [])
        c = code
        for x in labels:
            parts[c % 3].append(x)
            c //= 3
        if all(parts):
            blocks = sorted((frozenset(p) for p in parts), key=lambda b: ordered(b))
            out.add(tuple(blocks))
    return sorted(out, key=lambda t: tuple(ordered(b) for b in t))


def check_primitives(kind: str, ground: int | Iterable) -> Report:
    """``is_primitive(z*)`` holds exactly for single-factor ``z``."""
    I = _ground_labels(ground)
    report = Report(f"primitives[{kind}, |I|={len(I)}]")
    for z in basis(kind, I):
        report.record(is_primitive(DualElement(z)) == z.is_atomic(), lambda: f"{z}*")
    return report


def check_cocommutativity(kind: str, ground: int | Iterable) -> Report:
    I = _ground_labels(ground)
    report = Report(f"cocommutativity[{kind}, |I|={len(I)}]")
    for z in basis(kind, I):
        zs = DualElement(z)
        for d in enumerate_decompositions(I):
            swapped = dual_coproduct(zs, d).map_keys(lambda t: (t[1], t[0]))
            report.record(swapped == dual_coproduct(zs, d.swapped()), lambda: f"{z}* at S={ordered(d.S)}")
    return report

