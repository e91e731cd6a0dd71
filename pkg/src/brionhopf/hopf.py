"""Hopf monoids of permutahedra, associahedra, orbit polytopes and posets.

A basis element is an unordered set of atomic factors whose ground sets
partition ``I``. Products take unions of factor sets; coproducts split each
factor and collect the pieces on either side.

* ``perm``  atoms: a block ``B`` (the permutahedron ``π_B``)
* ``assoc`` atoms: a linear order on a block (the associahedron ``a_ℓ``)
* ``orbit`` atoms: ``(B, λ)`` with ``λ`` a composition of ``|B|`` (the class ``O_λ``).
  A single-part composition is a point, so ``O_(m)`` on ``m >= 2`` labels is
  stored as the product of ``m`` one-point factors.
* ``poset`` atoms: connected posets; an element is their disjoint union.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Any, Callable, Iterable, Iterator, Sequence

from .combinat import (
    composition,
    compositions,
    enumerate_trees,
    linear_order,
    maximal_intervals,
    split_composition,
)
from .core import (
    Decomposition,
    FormalSum,
    as_ground,
    enumerate_decompositions,
    enumerate_triple_decompositions,
    label_key,
    ordered,
    register_key_type,
    set_partitions,
)
from .geometry import (
    LatticePolytope,
    associahedron_vertices,
    orbit_vertices,
    permutahedron_vertices,
    product_polytope,
)
from .posets import (
    Poset,
    all_posets,
    chain_from_order,
    components,
    disjoint_union,
    is_connected,
    is_lower_set,
    layered_poset,
    poset_coproduct,
    rbt_poset,
    restrict,
)

KINDS = ("perm", "assoc", "orbit", "poset")
GEOMETRIC_KINDS = ("perm", "assoc", "orbit")


# -- per-monoid atom behaviour ------------------------------------------------------
class _Perm:
    def ground(self, atom: frozenset) -> frozenset:
        return atom

    def split(self, atom, S):
        return [atom & S], [atom - S]

    def atoms_on(self, block: frozenset) -> list:
        return [frozenset(block)]

    def key(self, atom):
        return tuple(label_key(x) for x in ordered(atom))

    def text(self, atom) -> str:
        return ",".join(ordered(atom))

    def relabel(self, atom, mapping):
        return frozenset(mapping[x] for x in atom)

    def brion(self, atom) -> FormalSum:
        return FormalSum((chain_from_order(order), 1) for order in permutations(ordered(atom)))

    def realize(self, atom) -> LatticePolytope:
        return permutahedron_vertices(atom)

    def encode(self, atom):
        return list(ordered(atom))

    def decode(self, data):
        return as_ground(data)


class _Assoc:
    def ground(self, atom: tuple) -> frozenset:
        return frozenset(atom)

    def split(self, atom, S):
        left = tuple(x for x in atom if x in S)
        return [left], maximal_intervals(atom, frozenset(atom) - S)

    def atoms_on(self, block: frozenset) -> list:
        return [tuple(p) for p in permutations(ordered(block))]

    def key(self, atom):
        return (len(atom), tuple(label_key(x) for x in atom))

    def text(self, atom) -> str:
        return "<".join(atom)

    def relabel(self, atom, mapping):
        return tuple(mapping[x] for x in atom)

    def brion(self, atom) -> FormalSum:
        return FormalSum((rbt_poset(t, atom), 1) for t in enumerate_trees(len(atom)))

    def realize(self, atom) -> LatticePolytope:
        return associahedron_vertices(atom)

    def encode(self, atom):
        return list(atom)

    def decode(self, data):
        return linear_order(data)


class _Orbit:
    def ground(self, atom) -> frozenset:
        return atom[0]

    def split(self, atom, S):
        block, lam = atom
        inside = block & S
        cut = split_composition(lam, len(inside))
        return [(inside, cut.left)], [(block - inside, cut.right)]

    def normalize(self, atoms) -> frozenset:
        out = set()
        for block, lam in atoms:
            if len(lam) == 1 and len(block) > 1:
                out.update((frozenset([x]), (1,)) for x in block)
            else:
                out.add((block, lam))
        return frozenset(out)

    def atoms_on(self, block: frozenset) -> list:
        if len(block) == 1:
            return [(frozenset(block), (1,))]
        return [(frozenset(block), lam) for lam in compositions(len(block)) if len(lam) > 1]

    def key(self, atom):
        block, lam = atom
        return (len(block), tuple(label_key(x) for x in ordered(block)), lam)

    def text(self, atom) -> str:
        block, lam = atom
        return "(" + ",".join(map(str, lam)) + "):" + ",".join(ordered(block))

    def relabel(self, atom, mapping):
        block, lam = atom
        return (frozenset(mapping[x] for x in block), lam)

    def brion(self, atom) -> FormalSum:
        block, lam = atom
        return FormalSum((layered_poset(lam, blocks), 1) for blocks in ordered_set_partitions(ordered(block), lam))

    def realize(self, atom) -> LatticePolytope:
        block, lam = atom
        return orbit_vertices(lam, block)

    def encode(self, atom):
        block, lam = atom
        return {"block": list(ordered(block)), "composition": list(lam)}

    def decode(self, data):
        return (as_ground(data["block"]), composition(data["composition"]))


class _PosetAtoms:
    def ground(self, atom: Poset) -> frozenset:
        return atom.ground

    def split(self, atom: Poset, S):
        inside = atom.ground & S
        if not is_lower_set(atom, inside):
            return None
        return _components(restrict(atom, inside)), _components(restrict(atom, atom.ground - inside))

    def atoms_on(self, block: frozenset) -> list:
        return [p for p in all_posets(block) if is_connected(p)]

    def key(self, atom: Poset):
        return atom.sort_key()

    def text(self, atom: Poset) -> str:
        return atom.to_text()[len("poset{") : -1]

    def relabel(self, atom: Poset, mapping):
        return atom.relabel(mapping)

    def brion(self, atom):
        raise TypeError("the Brion map is defined on polytopes, not on posets")

    def realize(self, atom):
        raise TypeError("posets are not realized as bounded polytopes")

    def encode(self, atom: Poset):
        return atom.to_json()

    def decode(self, data):
        return Poset.from_json(data)


def _components(p: Poset) -> list[Poset]:
    return [restrict(p, c) for c in components(p)]


MONOIDS: dict[str, Any] = {"perm": _Perm(), "assoc": _Assoc(), "orbit": _Orbit(), "poset": _PosetAtoms()}


def _normalize(kind: str, atoms: Iterable) -> frozenset:
    atoms = frozenset(atoms)
    norm = getattr(MONOIDS[kind], "normalize", None)
    return norm(atoms) if norm else atoms


def ordered_set_partitions(labels: Sequence[str], sizes: Sequence[int]) -> Iterator[list[list[str]]]:
    """Ways to fill consecutive blocks of the given sizes with ``labels``."""
    if not sizes:
        if not labels:
            yield []
        return
    for first in combinations(labels, sizes[0]):
        rest = [x for x in labels if x not in first]
        for tail in ordered_set_partitions(rest, sizes[1:]):
            yield [list(first), *tail]


# -- basis elements ------------------------------------------------------------------
@dataclass(frozen=True)
class Element:
    """A basis element of one of the four Hopf monoids."""

    kind: str
    atoms: frozenset
    ground: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in MONOIDS:
            raise ValueError(f"unknown monoid {self.kind!r}")
        monoid = MONOIDS[self.kind]
        seen: set = set()
        for atom in self.atoms:
            g = monoid.ground(atom)
            if not g:
                raise ValueError("empty factor")
            if g & seen:
                raise ValueError("factors overlap")
            seen |= g
        object.__setattr__(self, "ground", frozenset(seen))

    @classmethod
    def build(cls, kind: str, atoms: Iterable) -> "Element":
        return cls(kind, _normalize(kind, atoms))

    def atom_list(self) -> list:
        key = MONOIDS[self.kind].key
        return sorted(self.atoms, key=key)

    def is_atomic(self) -> bool:
        return len(self.atoms) == 1

    def sort_key(self):
        key = MONOIDS[self.kind].key
        return (KINDS.index(self.kind), len(self.ground), len(self.atoms), tuple(key(a) for a in self.atom_list()))

    def to_text(self) -> str:
        monoid = MONOIDS[self.kind]
        if not self.atoms:
            return f"{self.kind}{{}}"
        if self.kind == "poset":
            return self.to_poset().to_text()
        return "×".join(f"{self.kind}{{{monoid.text(a)}}}" for a in self.atom_list())

    __str__ = to_text

    def to_json(self) -> dict:
        monoid = MONOIDS[self.kind]
        return {"type": "element", "kind": self.kind, "factors": [monoid.encode(a) for a in self.atom_list()]}

    @classmethod
    def from_json(cls, data: dict) -> "Element":
        monoid = MONOIDS[data["kind"]]
        return cls.build(data["kind"], (monoid.decode(f) for f in data["factors"]))

    def relabel(self, mapping: dict) -> "Element":
        mapping = {str(k): str(v) for k, v in mapping.items()}
        monoid = MONOIDS[self.kind]
        return Element.build(self.kind, (monoid.relabel(a, mapping) for a in self.atoms))

    def to_poset(self) -> Poset:
        if self.kind != "poset":
            raise TypeError("not a poset element")
        p = Poset(())
        for atom in self.atoms:
            p = disjoint_union(p, atom)
        return p

    def __mul__(self, other: "Element") -> "Element":
        return product_elements(self, other)


register_key_type("element", Element.from_json)


# -- constructors --------------------------------------------------------------------
def unit(kind: str) -> Element:
    return Element(kind, frozenset())


def perm(*blocks: Iterable[Any]) -> Element:
    """``perm("ab", "c")`` is ``π_{ab} × π_c``."""
    return Element.build("perm", (as_ground(b) for b in blocks))


def assoc(*orders: Sequence[Any]) -> Element:
    return Element.build("assoc", (linear_order(o) for o in orders))


def orbit(*factors: tuple[Sequence[int], Iterable[Any]]) -> Element:
    """``orbit(((1, 2), "abc"))`` is ``O_(1,2)`` on ``{a, b, c}``."""
    atoms = []
    for lam, block in factors:
        lam, block = composition(lam), as_ground(block)
        if sum(lam) != len(block):
            raise ValueError(f"composition {lam} does not fit a block of size {len(block)}")
        atoms.append((block, lam))
    return Element.build("orbit", atoms)


def poset_element(p: Poset) -> Element:
    return Element("poset", frozenset(_components(p)))


# -- product and coproduct -----------------------------------------------------------
def product_elements(x: Element, y: Element) -> Element:
    if x.kind != y.kind:
        raise ValueError(f"cannot multiply {x.kind} by {y.kind}")
    if x.ground & y.ground:
        raise ValueError("product of elements on overlapping ground sets")
    return Element.build(x.kind, x.atoms | y.atoms)


def _split(x: Element, S: frozenset) -> tuple[Element, Element] | None:
    monoid = MONOIDS[x.kind]
    left, right = [], []
    for atom in x.atoms:
        g = monoid.ground(atom)
        if g <= S:
            left.append(atom)
        elif not g & S:
            right.append(atom)
        else:
            pieces = monoid.split(atom, S)
            if pieces is None:
                return None
            left.extend(pieces[0])
            right.extend(pieces[1])
    return Element.build(x.kind, left), Element.build(x.kind, right)


def coproduct(x: Element, d: Decomposition | Iterable[Any]) -> FormalSum:
    """``Δ_{S,T}(x)``: a single tensor with coefficient 1, or zero (posets only)."""
    if not isinstance(d, Decomposition):
        S = as_ground(d)
        d = Decomposition(S, x.ground - S)
    if d.S | d.T != x.ground or d.S & d.T:
        raise ValueError("decomposition does not match the element's ground set")
    pieces = _split(x, d.S)
    return FormalSum() if pieces is None else FormalSum.single(pieces)


def product_sums(a: FormalSum, b: FormalSum, mul: Callable[[Any, Any], Any] = product_elements) -> FormalSum:
    """Bilinear extension of a product on keys."""
    return FormalSum((mul(x, y), c * e) for x, c in a.items() for y, e in b.items())


def tensor_product_sums(a: FormalSum, b: FormalSum) -> FormalSum:
    """Keys of the result are concatenated tensors."""
    return FormalSum((_as_tuple(x) + _as_tuple(y), c * e) for x, c in a.items() for y, e in b.items())


def _as_tuple(key) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def coproduct_sum(s: FormalSum, d: Decomposition) -> FormalSum:
    return s.linear_map(lambda x: coproduct(x, d))


# -- the Brion map -------------------------------------------------------------------
def poset_product(p: Poset, q: Poset) -> Poset:
    return disjoint_union(p, q)


def brion(x: Element) -> FormalSum:
    """Combinatorial Brion map: chains, RBT posets, labelings of layered posets."""
    if x.kind not in GEOMETRIC_KINDS:
        raise TypeError("the Brion map is defined on permutahedra, associahedra and orbit polytopes")
    monoid = MONOIDS[x.kind]
    out = FormalSum.single(Poset(()))
    for atom in x.atom_list():
        out = product_sums(out, monoid.brion(atom), poset_product)
    return out


def brion_sum(s: FormalSum) -> FormalSum:
    return s.linear_map(brion)


def poset_coproduct_sum(s: FormalSum, d: Decomposition) -> FormalSum:
    return s.linear_map(lambda p: poset_coproduct(p, d))


def realize(x: Element) -> LatticePolytope:
    """A lattice polytope in the normal-equivalence class of ``x``."""
    if x.kind not in GEOMETRIC_KINDS:
        raise TypeError("only polytope elements can be realized")
    if not x.atoms:
        return LatticePolytope((), frozenset([()]))
    monoid = MONOIDS[x.kind]
    return product_polytope([monoid.realize(a) for a in x.atom_list()])


# -- bases -----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def _basis(kind: str, ground: frozenset) -> tuple[Element, ...]:
    monoid = MONOIDS[kind]
    out = []
    for blocks in set_partitions(ground):
        for atoms in product(*(monoid.atoms_on(b) for b in blocks)):
            out.append(Element(kind, frozenset(atoms)))
    return tuple(sorted(out, key=Element.sort_key))


def basis(kind: str, ground: Iterable[Any]) -> list[Element]:
    """Every basis element of the given monoid on ``ground``."""
    return list(_basis(kind, as_ground(ground)))


def atoms(kind: str, ground: Iterable[Any]) -> list[Element]:
    """The single-factor basis elements on exactly ``ground``."""
    monoid = MONOIDS[kind]
    return [Element(kind, frozenset([a])) for a in monoid.atoms_on(as_ground(ground))]


# -- axiom checks ----------------------------------------------------------------------
@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(detail())

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.checked} cases, {len(self.failures)} failures)"


def _ground_labels(n_or_ground: int | Iterable[Any]) -> frozenset:
    if isinstance(n_or_ground, int):
        return as_ground(range(1, n_or_ground + 1))
    return as_ground(n_or_ground)


def check_coassociativity(kind: str, ground: int | Iterable[Any]) -> Report:
    """``(Δ_{R,S} ⊗ id) Δ_{R⊔S,T} = (id ⊗ Δ_{S,T}) Δ_{R,S⊔T}`` on every basis element."""
    I = _ground_labels(ground)
    if len(I) > 5:
        raise ValueError("coassociativity check limited to |I| <= 5")
    report = Report(f"coassociativity[{kind}, |I|={len(I)}]")
    for z in basis(kind, I):
        for R, S, T in enumerate_triple_decompositions(I):
            lhs = FormalSum()
            for (a, b), c in coproduct(z, Decomposition(R | S, T)).items():
                lhs = lhs + tensor_product_sums(coproduct(a, Decomposition(R, S)), FormalSum.single(b)) * c
            rhs = FormalSum()
            for (a, b), c in coproduct(z, Decomposition(R, S | T)).items():
                rhs = rhs + tensor_product_sums(FormalSum.single(a), coproduct(b, Decomposition(S, T))) * c
            report.record(lhs == rhs, lambda: f"{z} at R={ordered(R)} S={ordered(S)} T={ordered(T)}")
    return report


def check_compatibility(kind: str, ground: int | Iterable[Any]) -> Report:
    """``Δ_{S,T}(x·y) = (μ⊗μ)(id⊗β⊗id)(Δ⊗Δ)(x⊗y)`` for all basis pairs."""
    I = _ground_labels(ground)
    if len(I) > 4:
        raise ValueError("compatibility check limited to |I| <= 4")
    report = Report(f"compatibility[{kind}, |I|={len(I)}]")
    for A, B in enumerate_decompositions(I):
        for x in basis(kind, A):
            for y in basis(kind, B):
                xy = product_elements(x, y)
                for S, T in enumerate_decompositions(I):
                    lhs = coproduct(xy, Decomposition(S, T))
                    rhs = FormalSum()
                    for (x1, x2), c in coproduct(x, Decomposition(S & A, T & A)).items():
                        for (y1, y2), e in coproduct(y, Decomposition(S & B, T & B)).items():
                            rhs = rhs + FormalSum.single((product_elements(x1, y1), product_elements(x2, y2)), c * e)
                    report.record(lhs == rhs, lambda: f"{x}·{y} at S={ordered(S)}")
    return report


def check_unitality(kind: str, ground: int | Iterable[Any]) -> Report:
    I = _ground_labels(ground)
    report = Report(f"unitality[{kind}, |I|={len(I)}]")
    one = unit(kind)
    for z in basis(kind, I):
        report.record(product_elements(z, one) == z, lambda: f"{z}·1")
        report.record(coproduct(z, Decomposition(frozenset(), I)) == FormalSum.single((one, z)), lambda: f"Δ_∅,I {z}")
        report.record(coproduct(z, Decomposition(I, frozenset())) == FormalSum.single((z, one)), lambda: f"Δ_I,∅ {z}")
    return report


def check_brion_morphism(kind: str, ground: int | Iterable[Any]) -> Report:
    """``B(x·y) = B(x)·B(y)`` and ``(B⊗B)Δ_{S,T} = Δ_{S,T} B``."""
    if kind not in GEOMETRIC_KINDS:
        raise ValueError("Brion morphism is checked on perm, assoc and orbit")
    I = _ground_labels(ground)
    if len(I) > 4:
        raise ValueError("Brion morphism check limited to |I| <= 4")
    report = Report(f"brion-morphism[{kind}, |I|={len(I)}]")
    for A, B in enumerate_decompositions(I):
        for x in basis(kind, A):
            bx = brion(x)
            for y in basis(kind, B):
                lhs = brion(product_elements(x, y))
                rhs = product_sums(bx, brion(y), poset_product)
                report.record(lhs == rhs, lambda: f"B({x}·{y})")
    for z in basis(kind, I):
        bz = brion(z)
        for d in enumerate_decompositions(I):
            lhs = FormalSum()
            for (a, b), c in coproduct(z, d).items():
                lhs = lhs + tensor_product_sums(brion(a), brion(b)) * c
            rhs = poset_coproduct_sum(bz, d)
            report.record(lhs == rhs, lambda: f"Δ B({z}) at S={ordered(d.S)}")
    return report
