"""Finite labeled posets stored by their covering relations."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

from .combinat import BinaryTree, binary_search_labeling, composition, tree_edges
from .core import Decomposition, FormalSum, as_ground, label_key, ordered, register_key_type

CANONICAL_BOUND = 12


class Poset:
    """A partial order on a finite set of string labels.

    Built from any set of pairs ``(a, b)`` meaning ``a < b``; the strict order
    is their transitive closure and ``covers`` its transitive reduction.
    """

    __slots__ = ("ground", "covers", "_above", "_below", "_hash")

    def __init__(self, ground: Iterable[Any], relations: Iterable[tuple[Any, Any]] = ()):
        ground = as_ground(ground)
        rel = {(str(a), str(b)) for a, b in relations}
        for a, b in rel:
            if a not in ground or b not in ground:
                raise ValueError(f"relation {a}<{b} leaves the ground set")
            if a == b:
                raise ValueError(f"relation {a}<{a} is not strict")
        above: dict[str, set[str]] = {x: set() for x in ground}
        for a, b in rel:
            above[a].add(b)
        # transitive closure, one DFS per element
        closed: dict[str, frozenset[str]] = {}
        for x in ground:
            seen: set[str] = set()
            stack = list(above[x])
            while stack:
                y = stack.pop()
                if y not in seen:
                    seen.add(y)
                    stack.extend(above[y])
            if x in seen:
                raise ValueError(f"relations contain a cycle through {x}")
            closed[x] = frozenset(seen)
        below: dict[str, set[str]] = {x: set() for x in ground}
        for x, ups in closed.items():
            for y in ups:
                below[y].add(x)
        covers = set()
        for x, ups in closed.items():
            for y in ups:
                if not any(y in closed[z] for z in ups if z != y):
                    covers.add((x, y))
        self.ground = ground
        self.covers = frozenset(covers)
        self._above = closed
        self._below = {x: frozenset(v) for x, v in below.items()}
        self._hash = hash((self.ground, self.covers))

    # -- basic queries ------------------------------------------------------
    def __len__(self) -> int:
        return len(self.ground)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.ground == other.ground and self.covers == other.covers

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({self.to_text()})"

    def less(self, a: str, b: str) -> bool:
        return b in self._above[a]

    def leq(self, a: str, b: str) -> bool:
        return a == b or b in self._above[a]

    def above(self, x: str) -> frozenset[str]:
        """Strictly greater elements."""
        return self._above[x]

    def below(self, x: str) -> frozenset[str]:
        return self._below[x]

    def upper_covers(self, x: str) -> list[str]:
        return ordered(b for a, b in self.covers if a == x)

    def lower_covers(self, x: str) -> list[str]:
        return ordered(a for a, b in self.covers if b == x)

    def relations(self) -> frozenset[tuple[str, str]]:
        return frozenset((a, b) for a, ups in self._above.items() for b in ups)

    def minimal_elements(self) -> list[str]:
        return [x for x in ordered(self.ground) if not self._below[x]]

    def maximal_elements(self) -> list[str]:
        return [x for x in ordered(self.ground) if not self._above[x]]

    def sort_key(self):
        return (
            len(self.ground),
            tuple(label_key(x) for x in ordered(self.ground)),
            tuple(sorted((label_key(a), label_key(b)) for a, b in self.covers)),
        )

    # -- text / JSON / DOT --------------------------------------------------
    def to_text(self) -> str:
        covers = sorted(self.covers, key=lambda c: (label_key(c[0]), label_key(c[1])))
        touched = {x for c in covers for x in c}
        parts = [f"{a}<{b}" for a, b in covers]
        parts += [x for x in ordered(self.ground) if x not in touched]
        return "poset{" + ",".join(parts) + "}"

    def to_json(self) -> dict:
        covers = sorted(self.covers, key=lambda c: (label_key(c[0]), label_key(c[1])))
        return {"type": "poset", "ground": list(ordered(self.ground)), "covers": [list(c) for c in covers]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Poset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["ground"], [tuple(c) for c in data["covers"]])

    def to_dot(self, name: str = "P") -> str:
        """Graphviz Hasse diagram with the minimum drawn at the bottom."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
        for x in ordered(self.ground):
            lines.append(f'  "{x}";')
        for a, b in sorted(self.covers, key=lambda c: (label_key(c[0]), label_key(c[1]))):
            lines.append(f'  "{a}" -> "{b}" [arrowhead=none];')
        lines.append("}")
        return "\n".join(lines)

    def relabel(self, mapping: dict[str, Any]) -> "Poset":
        return Poset((mapping[x] for x in self.ground), ((mapping[a], mapping[b]) for a, b in self.covers))


register_key_type("poset", Poset.from_json)


# -- operations used by the Hopf monoid of posets --------------------------------
def is_lower_set(p: Poset, S: Iterable[Any]) -> bool:
    S = as_ground(S)
    return all(p.below(s) <= S for s in S)


def restrict(p: Poset, S: Iterable[Any]) -> Poset:
    S = as_ground(S)
    if not S <= p.ground:
        raise ValueError("restriction to a set outside the ground set")
    return Poset(S, ((a, b) for a in S for b in p.above(a) if b in S))


def disjoint_union(p: Poset, q: Poset) -> Poset:
    if p.ground & q.ground:
        raise ValueError("disjoint union of posets with overlapping ground sets")
    return Poset(p.ground | q.ground, p.covers | q.covers)


def poset_coproduct(p: Poset, d: Decomposition) -> FormalSum:
    if d.S | d.T != p.ground or d.S & d.T:
        raise ValueError("decomposition does not match the poset's ground set")
    if not is_lower_set(p, d.S):
        return FormalSum()
    return FormalSum.single((restrict(p, d.S), restrict(p, d.T)))


def upset(p: Poset, v: str) -> Poset:
    if v not in p.ground:
        raise KeyError(v)
    return restrict(p, p.above(v) | {v})


def maximal_count(p: Poset) -> int:
    return len(p.maximal_elements())


def components(p: Poset) -> list[frozenset[str]]:
    """Connected components of the Hasse diagram, deterministic order."""
    adj: dict[str, set[str]] = {x: set() for x in p.ground}
    for a, b in p.covers:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[str] = set()
    out = []
    for x in ordered(p.ground):
        if x in seen:
            continue
        comp, stack = set(), [x]
        while stack:
            y = stack.pop()
            if y not in comp:
                comp.add(y)
                stack.extend(adj[y] - comp)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(p: Poset) -> bool:
    return len(components(p)) <= 1


def is_rbt_shaped(p: Poset) -> bool:
    """Tree-shaped: unique minimum, one lower cover per other element, <= 2 upper covers."""
    if not p.ground:
        return False
    lower = {x: 0 for x in p.ground}
    upper = {x: 0 for x in p.ground}
    for a, b in p.covers:
        upper[a] += 1
        lower[b] += 1
    roots = [x for x, k in lower.items() if k == 0]
    return len(roots) == 1 and all(k <= 1 for k in lower.values()) and all(k <= 2 for k in upper.values())


def symmetric_count(p: Poset) -> int:
    """Elements covered by exactly two elements whose upsets are isomorphic."""
    if not is_rbt_shaped(p):
        raise ValueError("symmetric_count is only defined for RBT-shaped posets")
    count = 0
    for x in p.ground:
        ups = p.upper_covers(x)
        if len(ups) == 2 and canonical_form(upset(p, ups[0])) == canonical_form(upset(p, ups[1])):
            count += 1
    return count


# -- special families -------------------------------------------------------------
def chain_from_order(ell: Sequence[Any]) -> Poset:
    ell = [str(x) for x in ell]
    return Poset(ell, zip(ell, ell[1:]))


def antichain(labels: Iterable[Any]) -> Poset:
    return Poset(labels)


def layered_poset(lam: Sequence[int], blocks: Sequence[Sequence[Any]]) -> Poset:
    """Levels ``blocks[0]`` (bottom) ... ``blocks[-1]`` with complete covers between neighbours."""
    lam = composition(lam)
    blocks = [[str(x) for x in b] for b in blocks]
    if [len(b) for b in blocks] != list(lam):
        raise ValueError(f"block sizes {[len(b) for b in blocks]} do not match {lam}")
    ground = [x for b in blocks for x in b]
    rel = [(a, b) for lo, hi in zip(blocks, blocks[1:]) for a in lo for b in hi]
    return Poset(ground, rel)


def standard_layered_poset(lam: Sequence[int]) -> Poset:
    """``p(lam)`` labeled 1..n level by level from the bottom."""
    blocks, start = [], 1
    for part in composition(lam):
        blocks.append([str(i) for i in range(start, start + part)])
        start += part
    return layered_poset(lam, blocks)


def rbt_poset(tree: BinaryTree, ell: Sequence[Any]) -> Poset:
    """Prune the leaves of ``tree``, forget left/right; the root is the minimum."""
    labels = binary_search_labeling(tree, ell)
    return Poset(labels.values(), ((labels[a], labels[b]) for a, b in tree_edges(tree)))


# -- canonical forms --------------------------------------------------------------
@dataclass(frozen=True)
class UnlabeledPoset:
    """An isomorphism class, stored as a canonical poset on ``1..n``."""

    size: int
    covers: tuple[tuple[int, int], ...]

    def to_poset(self) -> Poset:
        return Poset(range(1, self.size + 1), self.covers)

    def sort_key(self):
        return (self.size, self.covers)

    def to_text(self) -> str:
        return "[" + self.to_poset().to_text() + "]"

    def to_json(self) -> dict:
        return {"type": "unlabeled_poset", "size": self.size, "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_json(cls, data: dict) -> "UnlabeledPoset":
        return cls(data["size"], tuple(tuple(c) for c in data["covers"]))


register_key_type("unlabeled_poset", UnlabeledPoset.from_json)


def _refine(colors: list[int], ups: list[list[int]], downs: list[list[int]]) -> list[int]:
    """Colour refinement to a stable, label-independent partition."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[i], tuple(sorted(colors[j] for j in ups[i])), tuple(sorted(colors[j] for j in downs[i])))
            for i in range(len(colors))
        ]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def canonical_form(p: Poset, bound: int = CANONICAL_BOUND) -> UnlabeledPoset:
    """Canonical relabeling by ``1..n``: equal results iff isomorphic posets.

    Invariant refinement, then a search over individualizations of the first
    non-singleton colour class, keeping the least certificate. Incomparable
    elements with identical upper and lower covers (twins) are interchangeable,
    so only one of each twin group is individualized.
    """
    n = len(p.ground)
    if n > bound:
        raise ValueError(f"canonical form limited to {bound} elements, got {n}")
    labels = ordered(p.ground)
    index = {x: i for i, x in enumerate(labels)}
    ups: list[list[int]] = [[] for _ in range(n)]
    downs: list[list[int]] = [[] for _ in range(n)]
    for a, b in p.covers:
        ups[index[a]].append(index[b])
        downs[index[b]].append(index[a])
    edges = [(index[a], index[b]) for a, b in p.covers]
    init = [(len(p.above(x)), len(p.below(x)), len(ups[i]), len(downs[i])) for i, x in enumerate(labels)]
    rank = {s: r for r, s in enumerate(sorted(set(init)))}
    colors = _refine([rank[s] for s in init], ups, downs)
    twin_sig = [(frozenset(ups[i]), frozenset(downs[i])) for i in range(n)]

    best: tuple | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            cert = tuple(sorted((colors[a], colors[b]) for a, b in edges))
            if best is None or cert < best:
                best = cert
            return
        tried = set()
        for x in cells[target]:
            if twin_sig[x] in tried:
                continue
            tried.add(twin_sig[x])
            split = [2 * c + (1 if c == target and i != x else 0) for i, c in enumerate(colors)]
            search(_refine(split, ups, downs))

    search(colors)
    return UnlabeledPoset(n, tuple((a + 1, b + 1) for a, b in best or ()))


def are_isomorphic(p: Poset, q: Poset) -> bool:
    return len(p) == len(q) and canonical_form(p) == canonical_form(q)


# -- enumeration ------------------------------------------------------------------
def _ideals(p: Poset) -> Iterator[frozenset[str]]:
    labels = ordered(p.ground)
    for k in range(len(labels) + 1):
        for combo in combinations(labels, k):
            S = frozenset(combo)
            if is_lower_set(p, S):
                yield S


@lru_cache(maxsize=None)
def _all_posets(ground: frozenset[str]) -> frozenset[Poset]:
    if not ground:
        return frozenset([Poset(())])
    out = set()
    for top in ground:
        rest = ground - {top}
        for q in _all_posets(rest):
            for ideal in _ideals(q):
                out.add(Poset(ground, q.relations() | {(a, top) for a in ideal}))
    return frozenset(out)


def all_posets(ground: Iterable[Any]) -> list[Poset]:
    """Every labeled poset on ``ground`` (219 on four elements).

    Each poset arises by adding a maximal element on top of some ideal of a
    poset on the remaining elements.
    """
    return sorted(_all_posets(as_ground(ground)), key=lambda q: q.sort_key())


def connected_posets(ground: Iterable[Any]) -> list[Poset]:
    return [q for q in all_posets(ground) if is_connected(q)]


@lru_cache(maxsize=None)
def unlabeled_posets(n: int) -> tuple[UnlabeledPoset, ...]:
    """All isomorphism classes on ``n`` elements (1, 1, 2, 5, 16, 63, ...)."""
    if n == 0:
        return (canonical_form(Poset(())),)
    classes = set()
    top = str(n)
    for prev in unlabeled_posets(n - 1):
        q = prev.to_poset()
        for ideal in _ideals(q):
            classes.add(canonical_form(Poset(q.ground | {top}, q.relations() | {(a, top) for a in ideal})))
    return tuple(sorted(classes, key=lambda c: c.sort_key()))
