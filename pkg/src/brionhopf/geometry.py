"""Exact vertex-cone geometry for lattice polytopes.

This module is the independent ground truth for the Brion map: it knows
nothing about trees, chains or layered posets beyond the vertex sets of the
three polytope families. Tangent cones are taken as ``cone{u - v}`` over all
vertices ``u``, and membership is decided by an exact rational simplex.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Iterable, Sequence

from .combinat import composition, enumerate_trees, linear_order, loday_vertex
from .core import FormalSum, as_ground, ordered
from .posets import Poset

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer points; coordinates follow ``ground`` order."""

    ground: tuple[str, ...]
    vertices: frozenset[Point]

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("repeated coordinate label")
        for v in self.vertices:
            if len(v) != len(self.ground):
                raise ValueError(f"vertex {v} has wrong dimension")

    @classmethod
    def from_points(cls, ground: Iterable[Any], points: Iterable[Sequence[int]]) -> "LatticePolytope":
        return cls(tuple(str(x) for x in ground), frozenset(tuple(int(c) for c in p) for p in points))

    @classmethod
    def from_mapping_points(cls, ground: Iterable[Any], points: Iterable[dict]) -> "LatticePolytope":
        labels = ordered(ground)
        return cls(labels, frozenset(tuple(p[x] for x in labels) for p in points))

    def sorted_vertices(self) -> list[Point]:
        return sorted(self.vertices)

    def coordinate(self, label: str) -> int:
        return self.ground.index(label)

    def project(self, labels: Iterable[str]) -> "LatticePolytope":
        keep = [x for x in self.ground if x in set(labels)]
        idx = [self.ground.index(x) for x in keep]
        return LatticePolytope(tuple(keep), frozenset(tuple(v[i] for i in idx) for v in self.vertices))

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "vertices": [list(v) for v in self.sorted_vertices()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "LatticePolytope":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_points(data["ground"], data["vertices"])


# -- the three families -----------------------------------------------------------
def permutahedron_vertices(ground: Iterable[Any]) -> LatticePolytope:
    labels = ordered(ground)
    if not labels:
        raise ValueError("permutahedron needs a nonempty ground set")
    return LatticePolytope(labels, frozenset(permutations(range(1, len(labels) + 1))))


def associahedron_vertices(ell: Sequence[Any]) -> LatticePolytope:
    ell = linear_order(ell)
    if not ell:
        raise ValueError("associahedron needs a nonempty order")
    points = [loday_vertex(t, ell) for t in enumerate_trees(len(ell))]
    return LatticePolytope.from_mapping_points(ell, points)


def orbit_point(lam: Sequence[int], ground: Iterable[Any]) -> dict[str, int]:
    """The point ``(k,..,k, .., 1,..,1)`` with ``lam[i]`` copies of ``k - i``."""
    lam = composition(lam)
    labels = ordered(ground)
    if sum(lam) != len(labels):
        raise ValueError(f"composition {lam} does not match {len(labels)} coordinates")
    values = [len(lam) - i for i, part in enumerate(lam) for _ in range(part)]
    return dict(zip(labels, values))


def orbit_vertices(lam: Sequence[int], ground: Iterable[Any]) -> LatticePolytope:
    labels = ordered(ground)
    p = orbit_point(lam, labels)
    return LatticePolytope(labels, frozenset(permutations([p[x] for x in labels])))


def product_polytope(parts: Sequence[LatticePolytope]) -> LatticePolytope:
    """Cartesian product, re-indexed by the natural order of all labels."""
    ground = ordered(x for P in parts for x in P.ground)
    points = []
    for combo in product(*(P.sorted_vertices() for P in parts)):
        coords = {}
        for P, v in zip(parts, combo):
            coords.update(zip(P.ground, v))
        points.append(coords)
    return LatticePolytope.from_mapping_points(ground, points)


# -- exact cone membership --------------------------------------------------------
def nonnegative_combination(columns: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Decide ``target = sum mu_j columns[j]`` with ``mu >= 0`` exactly.

    Phase-one simplex over the rationals with Bland's rule (terminates without
    cycling). Feasible iff the artificial variables can all be driven to 0.
    """
    m, k = len(target), len(columns)
    width = k + m + 1
    rows: list[list[Fraction]] = []
    for i in range(m):
        sign = -1 if target[i] < 0 else 1
        row = [Fraction(sign * col[i]) for col in columns]
        row += [Fraction(1 if r == i else 0) for r in range(m)]
        row.append(Fraction(sign * target[i]))
        rows.append(row)
    # reduced costs for minimizing the sum of artificials
    cost = [-sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(k)] + [Fraction(0)] * m
    cost.append(-sum((rows[i][-1] for i in range(m)), Fraction(0)))
    basis = [k + i for i in range(m)]
    while True:
        enter = next((j for j in range(width - 1) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # cannot happen: phase one is bounded below by 0
            raise AssertionError("unbounded phase-one problem")
        pivot_row = rows[leave]
        p = pivot_row[enter]
        pivot_row[:] = [x / p for x in pivot_row]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i][:] = [x - f * y for x, y in zip(rows[i], pivot_row)]
        f = cost[enter]
        cost[:] = [x - f * y for x, y in zip(cost, pivot_row)]
        basis[leave] = enter
    return cost[-1] == 0


def _generators(V: LatticePolytope, v: Point) -> list[Point]:
    if v not in V.vertices:
        raise ValueError(f"{v} is not a listed vertex")
    return [tuple(a - b for a, b in zip(u, v)) for u in V.sorted_vertices() if u != v]


def _positive_multiple(d: Sequence[int], g: Sequence[int]) -> bool:
    ratio = None
    for a, b in zip(d, g):
        if (a == 0) != (b == 0):
            return False
        if a:
            r = Fraction(a, b)
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    return ratio is not None


def cone_member(V: LatticePolytope, v: Sequence[int], d: Sequence[int]) -> bool:
    """Is ``d`` in the tangent cone ``cone{u - v : u vertex}``?"""
    v, d = tuple(v), tuple(d)
    if not any(d):
        raise ValueError("direction must be nonzero")
    gens = _generators(V, v)
    if any(_positive_multiple(d, g) for g in gens):
        return True
    return nonnegative_combination(gens, d)


def root_vector(ground: Sequence[str], i: str, j: str) -> Point:
    """``e_i - e_j``."""
    return tuple((1 if x == i else 0) - (1 if x == j else 0) for x in ground)


def _down_closure(above: dict[str, set[str]], x: str) -> set[str]:
    below = {y for y, ups in above.items() if x in ups}
    return below | {x}


def vertex_poset(V: LatticePolytope, v: Sequence[int], lp_only: bool = False) -> Poset:
    """Poset with ``i >= j`` iff ``e_i - e_j`` lies in the tangent cone at ``v``.

    Root directions that are positive multiples of some ``u - v`` are in the
    cone, as are sums of those. Every other pair is decided either by an
    exact Farkas certificate (the indicator of a down-set of the candidate
    order, checked against all generators) or, failing that, by the simplex.
    ``lp_only`` skips the shortcuts and runs the simplex on every pair.
    """
    v = tuple(v)
    gens = _generators(V, v)
    labels = V.ground
    greater: dict[str, set[str]] = {x: set() for x in labels}  # greater[j] = {i : i >= j}
    if lp_only:
        for i in labels:
            for j in labels:
                if i != j and nonnegative_combination(gens, root_vector(labels, i, j)):
                    greater[j].add(i)
        for j in labels:
            for i in greater[j]:
                if not greater[i] <= greater[j]:
                    raise AssertionError("cone relation is not transitive")
    else:
        for i in labels:
            for j in labels:
                if i != j and any(_positive_multiple(root_vector(labels, i, j), g) for g in gens):
                    greater[j].add(i)
        changed = True
        while changed:
            changed = False
            for j in labels:
                extra = set().union(*(greater[i] for i in greater[j])) - greater[j] - {j}
                if extra:
                    greater[j] |= extra
                    changed = True
        idx = {x: n for n, x in enumerate(labels)}
        for i in labels:
            for j in labels:
                if i == j or i in greater[j]:
                    continue
                # y = indicator of {k : k <= i}; y.(e_i - e_j) = 1 > 0 needs y.g <= 0 for all g
                down = _down_closure(greater, i)
                if j not in down and all(sum(g[idx[k]] for k in down) <= 0 for g in gens):
                    continue
                if nonnegative_combination(gens, root_vector(labels, i, j)):
                    greater[j].add(i)
    for j in labels:
        for i in greater[j]:
            if j in greater[i]:
                raise ValueError("tangent cone contains a line: input is not a generalized permutahedron")
    poset = Poset(labels, ((j, i) for j in labels for i in greater[j]))
    if not _inside_poset_cone(poset, gens, labels):
        raise ValueError("tangent cone is not a poset cone: input is not a generalized permutahedron")
    return poset


def _inside_poset_cone(p: Poset, gens: list[Point], labels: Sequence[str]) -> bool:
    """Every generator lies in ``cone{e_i - e_j : j < i}``.

    A vector is in that cone iff its coordinates sum to zero and its sum over
    every lower set is nonpositive.
    """
    idx = {x: n for n, x in enumerate(labels)}
    lower_sets = [[idx[x] for x in L] for L in _lower_sets(p, labels)]
    for g in gens:
        if sum(g) != 0:
            return False
        if any(sum(g[k] for k in L) > 0 for L in lower_sets):
            return False
    return True


def _lower_sets(p: Poset, labels: Sequence[str]) -> list[frozenset[str]]:
    out = [frozenset()]
    for x in sorted(labels, key=lambda y: len(p.below(y))):
        # extend each lower set by x when everything below x is already present
        out += [L | {x} for L in out if p.below(x) <= L]
    return out


def brion_geometric(V: LatticePolytope) -> FormalSum:
    """Sum of the vertex posets over all vertices."""
    return FormalSum((vertex_poset(V, v), 1) for v in V.sorted_vertices())


def max_face_split(V: LatticePolytope, S: Iterable[Any]) -> tuple[LatticePolytope, LatticePolytope]:
    """Split the ``1_S``-maximal face as a product of an S-part and a T-part."""
    S = as_ground(S)
    if not S <= set(V.ground):
        raise ValueError("S is not a subset of the ground set")
    idx = [V.ground.index(x) for x in V.ground if x in S]
    best = max(sum(v[i] for i in idx) for v in V.vertices)
    face = [v for v in V.vertices if sum(v[i] for i in idx) == best]
    face_poly = LatticePolytope(V.ground, frozenset(face))
    T = [x for x in V.ground if x not in S]
    left, right = face_poly.project(S), face_poly.project(T)
    if len(left.vertices) * len(right.vertices) != len(face):
        raise ValueError("1_S-maximal face is not a product: input is not a generalized permutahedron")
    return left, right


def is_vertex(V: LatticePolytope, v: Sequence[int]) -> bool:
    """``v`` is extreme iff it is not in the convex hull of the other points."""
    v = tuple(v)
    others = [u for u in V.sorted_vertices() if u != v]
    if not others:
        return True
    # v = sum lam_u u, sum lam_u = 1, lam >= 0
    columns = [tuple(u) + (1,) for u in others]
    return not nonnegative_combination(columns, v + (1,))
