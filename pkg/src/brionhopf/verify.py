"""The acceptance checks, one function each, shared by the tests and the CLI.

Every check is exhaustive within its bounds and exact. Each returns a
:class:`CriterionResult` carrying a short human-readable summary.
"""
from __future__ import annotations

import inspect
import random
import time
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable

from .combinat import (
    catalan,
    compositions,
    enumerate_trees,
    loday_vertex,
    multinomial,
    tree_from_string,
    tree_size,
)
from .core import Decomposition, FormalSum
from .dual import check_dual_products, check_lie_axioms, check_primitives
from .fock import (
    UnlabeledElement,
    assoc_class,
    brion_fock,
    chain_class,
    dual_brion,
    fock_atoms,
    orbit_class,
    perm_class,
    representative,
    totally_symmetric_count,
    unlabel,
    verify_catalan,
    verify_catalan_parity,
    witt_bracket,
    witt_bracket_species,
    witt_expected,
)
from .geometry import brion_geometric
from .hopf import (
    GEOMETRIC_KINDS,
    KINDS,
    assoc,
    brion,
    check_brion_morphism,
    check_coassociativity,
    check_compatibility,
    coproduct,
    orbit,
    perm,
    poset_coproduct_sum,
    product_elements,
    realize,
    tensor_product_sums,
    unit,
)
from .posets import canonical_form, is_connected, maximal_count, rbt_poset, symmetric_count, unlabeled_posets

# The tree ``(2,1,6,1)`` in Dyck encoding: root with a 2-vertex left subtree
# (a vertex with a right child) and a single right child.
DOCUMENTED_TREE = "(()())()"
DOCUMENTED_VERTEX = (2, 1, 6, 1)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def require(self, ok: bool, message: str) -> None:
        if not ok:
            self.passed = False
            if len(self.details) < 20:
                self.details.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else ": " + "; ".join(self.details[:3])
        name = f"criterion {self.number:2d}" if self.number else "spot checks "
        return f"[{status}] {name}: {self.title} ({self.seconds:.1f}s){extra}"


def _timed(number: int, title: str, body: Callable[[CriterionResult], None]) -> CriterionResult:
    result = CriterionResult(number, title)
    start = time.perf_counter()
    body(result)
    result.seconds = time.perf_counter() - start
    return result


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


# -- 1 ---------------------------------------------------------------------------------
def oracle_elements(max_n: int = 5) -> list:
    """Atoms of all three families on ``1..n``, plus shuffled orders and mixed products."""
    out = []
    for n in range(1, max_n + 1):
        labels = _labels(n)
        out.append(perm(labels))
        out.append(assoc(labels))
        out.append(assoc(labels[1:] + labels[:1]))
        out.extend(orbit((lam, labels)) for lam in compositions(n))
    if max_n >= 4:
        out.append(perm("12", "34"))
        out.append(assoc("21", "43"))
        out.append(orbit(((1, 2), "134"), ((1,), "2")))
    return out


def criterion_1(max_n: int = 5) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for x in oracle_elements(max_n):
            r.require(brion_geometric(realize(x)) == brion(x), f"B({x}) differs from the vertex-cone oracle")

    return _timed(1, f"vertex-cone oracle equals combinatorial Brion map (|I| <= {max_n})", body)


# -- 2 ---------------------------------------------------------------------------------
def criterion_2(max_n: int = 5, max_fock: int = 8) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for n in range(1, max_n + 1):
            image = brion(perm(_labels(n)))
            r.require(len(image) == factorial(n), f"B(π_{n}) has {len(image)} terms")
            r.require(all(c == 1 and len(p.relations()) == n * (n - 1) // 2 for p, c in image.items()), f"B(π_{n}) not all chains")
            r.require(unlabel(image) == brion_fock(perm_class(n)), f"unlabeled B(π_{n}) is not n!·c_n")
        for n in range(1, max_fock + 1):
            r.require(brion_fock(perm_class(n)) == FormalSum.single(chain_class(n), factorial(n)), f"B(π_{n}) at Fock level")

    return _timed(2, f"chains theorem (|I| <= {max_n}, Fock n <= {max_fock})", body)


# -- 3 ---------------------------------------------------------------------------------
def criterion_3(max_n: int = 8) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for n in range(1, max_n + 1):
            labels = _labels(n)
            bucketed = FormalSum((canonical_form(rbt_poset(t, labels)), 1) for t in enumerate_trees(n))
            recomputed = FormalSum(
                (p, 2 ** (n - maximal_count(p.to_poset()) - symmetric_count(p.to_poset()))) for p in bucketed.keys()
            )
            r.require(bucketed == recomputed, f"bucketed RBT coefficients differ from 2^(n-m-s) at n={n}")
            r.require(brion_fock(assoc_class(n)) == bucketed, f"brion_fock(a_{n}) differs from bucketing")
            r.require(bucketed.total() == catalan(n), f"bucketed total at n={n}")

    return _timed(3, f"RBT coefficients 2^(n-m-s) (n <= {max_n})", body)


# -- 4 ---------------------------------------------------------------------------------
def criterion_4(max_n: int = 10) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for n in range(1, max_n + 1):
            r.require(verify_catalan(n), f"Catalan identity at n={n}")
            r.require(verify_catalan_parity(n), f"Catalan parity at n={n}")
            mersenne = (n + 1) & n == 0
            r.require((catalan(n) % 2 == 1) == mersenne, f"C_{n} parity")
            r.require(totally_symmetric_count(n) == (1 if mersenne else 0), f"totally symmetric count at n={n}")
        if max_n >= 10:
            r.require(catalan(10) == 16796, "C_10")
            r.require([n for n in range(1, 11) if catalan(n) % 2] == [1, 3, 7], "odd Catalan numbers up to 10")

    return _timed(4, f"Catalan identity and parity (n <= {max_n})", body)


# -- 5 ---------------------------------------------------------------------------------
def criterion_5(max_n: int = 7, max_oracle: int = 5) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for n in range(1, max_n + 1):
            for lam in compositions(n):
                x = orbit((lam, _labels(n)))
                image = brion(x)
                r.require(unlabel(image) == brion_fock(orbit_class(lam)), f"B(O_{lam}) at Fock level")
                r.require(len(image) == multinomial(lam), f"B(O_{lam}) term count")
                if n <= max_oracle:
                    r.require(len(image) == len(realize(x).vertices), f"B(O_{lam}) vs vertex count")

    return _timed(5, f"orbit theorem (|λ| <= {max_n}, vertex counts |λ| <= {max_oracle})", body)


# -- 6, 7 ------------------------------------------------------------------------------
def criterion_6(max_n: int = 4) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for kind in KINDS:
            for n in range(max_n + 1):
                for report in (check_coassociativity(kind, n), check_compatibility(kind, n)):
                    r.require(report.passed, f"{report}: {report.failures[:1]}")

    return _timed(6, f"coassociativity and compatibility, all four monoids (|I| <= {max_n})", body)


def criterion_7(max_n: int = 4) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for kind in GEOMETRIC_KINDS:
            for n in range(max_n + 1):
                report = check_brion_morphism(kind, n)
                r.require(report.passed, f"{report}: {report.failures[:1]}")

    return _timed(7, f"Brion map is a Hopf morphism (|I| <= {max_n})", body)


# -- 8, 9, 11 --------------------------------------------------------------------------
def criterion_8(max_n: int = 4) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for kind in GEOMETRIC_KINDS:
            report = check_dual_products(kind, max_n)
            r.require(report.passed and report.checked > 0, f"{report}: {report.failures[:1]}")

    return _timed(8, f"closed dual products equal brute-force dualization (|I| <= {max_n})", body)


def criterion_9(max_n: int = 4) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for kind in GEOMETRIC_KINDS:
            report = check_lie_axioms(kind, max_n)
            r.require(report.passed and report.checked > 0, f"{report}: {report.failures[:1]}")

    return _timed(9, f"antisymmetry, Jacobi, vanishing perm bracket (|I| <= {max_n})", body)


def criterion_11(max_n: int = 4) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for kind in KINDS:
            for n in range(1, max_n + 1):
                report = check_primitives(kind, n)
                r.require(report.passed, f"{report}: {report.failures[:1]}")

    return _timed(11, f"primitives are exactly single-factor duals (|I| <= {max_n})", body)


# -- 10 --------------------------------------------------------------------------------
def criterion_10(max_grade: int = 6, max_species: int = 5) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for s in range(1, max_grade + 1):
            for t in range(1, max_grade + 1):
                r.require(witt_bracket(s, t) == witt_expected(s, t), f"[a_{s}*, a_{t}*]")
                if s + t <= max_species:
                    r.require(witt_bracket_species(s, t) == witt_expected(s, t), f"species [a_{s}*, a_{t}*]")

    return _timed(10, f"Witt bracket (s,t <= {max_grade}; species check s+t <= {max_species})", body)


# -- 12 --------------------------------------------------------------------------------
def criterion_12(max_n: int = 5) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        zero_cases = 0
        for kind in GEOMETRIC_KINDS:
            for n in range(1, max_n + 1):
                images = {q: unlabel(brion(representative(q))) for q in fock_atoms(kind, n)}
                for p in unlabeled_posets(n):
                    connected = is_connected(p.to_poset())
                    if connected:
                        functional = dual_brion(p, kind)
                        r.require(len(functional) <= 1, f"B*_{kind}({p.to_text()}) has several terms")
                    for q, image in images.items():
                        lhs = functional[UnlabeledElement.build(q.kind, q.atoms, dual=True)] if connected else 0
                        r.require(lhs == image[p], f"<B*_{kind}({p.to_text()}*), {q}>")
                        zero_cases += lhs == 0
        r.require(zero_cases > 0, "no zero cases exercised")

    return _timed(12, f"dual Brion maps are adjoint to B (posets <= {max_n})", body)


# -- 13 --------------------------------------------------------------------------------
def criterion_13(max_n: int = 8) -> CriterionResult:
    def body(r: CriterionResult) -> None:
        for n in range(1, max_n + 1):
            labels = _labels(n)
            for t in enumerate_trees(n):
                v = loday_vertex(t, labels)
                r.require(sum(v.values()) == comb(n + 1, 2), f"Loday sum for a tree with {n} vertices")
        tree = tree_from_string(DOCUMENTED_TREE)
        v = loday_vertex(tree, _labels(tree_size(tree)))
        r.require(tuple(v[x] for x in _labels(4)) == DOCUMENTED_VERTEX, f"documented tree gives {v}")

    return _timed(13, f"Loday coordinates sum to C(n+1,2) (n <= {max_n})", body)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
    13: criterion_13,
}


# Largest values each bound may take before a run is refused.
HARD_LIMITS: dict[int, dict[str, int]] = {
    1: {"max_n": 6},
    2: {"max_n": 7, "max_fock": 12},
    3: {"max_n": 10},
    4: {"max_n": 12},
    5: {"max_n": 8, "max_oracle": 6},
    6: {"max_n": 4},
    7: {"max_n": 4},
    8: {"max_n": 5},
    9: {"max_n": 4},
    10: {"max_grade": 12, "max_species": 5},
    11: {"max_n": 5},
    12: {"max_n": 6},
    13: {"max_n": 10},
}


class BoundError(ValueError):
    pass


def _bounds(number: int, max_n: int | None, max_grade: int | None, strict: bool) -> dict[str, int]:
    params = inspect.signature(CRITERIA[number]).parameters
    out = {}
    for name, param in params.items():
        cap = max_grade if name in ("max_grade", "max_species") else max_n
        if cap is None:
            continue
        primary = name in ("max_n", "max_grade")
        value = cap if strict and primary else min(param.default, cap)
        if value > HARD_LIMITS[number][name]:
            raise BoundError(f"criterion {number}: {name}={value} exceeds the limit {HARD_LIMITS[number][name]}")
        if value < 1:
            raise BoundError(f"criterion {number}: {name} must be positive")
        out[name] = value
    return out


def run_criterion(number: int, max_n: int | None = None, max_grade: int | None = None, strict: bool = False) -> CriterionResult:
    """Run one criterion; ``strict`` uses the given bound as is instead of capping the default."""
    return CRITERIA[number](**_bounds(number, max_n, max_grade, strict))


def run_all(max_n: int | None = None, max_grade: int | None = None) -> list[CriterionResult]:
    bounds = {k: _bounds(k, max_n, max_grade, strict=False) for k in sorted(CRITERIA)}
    return [CRITERIA[k](**bounds[k]) for k in sorted(CRITERIA)]


# -- randomized spot checks beyond the exhaustive range ----------------------------------
def random_checks(seed: int = 0, samples: int = 50, size: int = 6) -> CriterionResult:
    """Random elements on ``size`` labels: compatibility, coassociativity, Brion morphism, relabeling."""
    rng = random.Random(seed)

    def body(r: CriterionResult) -> None:
        labels = [str(i) for i in range(1, size + 1)]
        for _ in range(samples):
            kind = rng.choice(GEOMETRIC_KINDS)
            x = random_element(rng, kind, labels)
            S = frozenset(l for l in labels if rng.random() < 0.5)
            d = Decomposition(S, frozenset(labels) - S)
            r.require(poset_coproduct_sum(brion(x), d) == brion_coproduct(x, d), f"Brion square for {x}")
            shuffled = labels[:]
            rng.shuffle(shuffled)
            y = x.relabel(dict(zip(labels, shuffled)))
            r.require(unlabel(brion(x)) == unlabel(brion(y)), f"relabeling invariance for {x}")
            R = frozenset(l for l in S if rng.random() < 0.5)
            report_ok = _coassociative_at(x, R, S - R, d.T)
            r.require(report_ok, f"coassociativity for {x}")
            A = frozenset(l for l in labels if rng.random() < 0.5)
            left = random_element(rng, kind, sorted(A))
            right = random_element(rng, kind, [l for l in labels if l not in A])
            r.require(_compatible_at(left, right, d), f"compatibility for {left}, {right}")

    return _timed(0, f"randomized checks (seed {seed}, {samples} samples on {size} labels)", body)


def random_element(rng: random.Random, kind: str, labels: list[str]):
    """Random set partition of ``labels`` with a random atom on each block."""
    blocks: list[list[str]] = []
    for l in labels:
        i = rng.randrange(len(blocks) + 1)
        if i == len(blocks):
            blocks.append([l])
        else:
            blocks[i].append(l)
    factors = []
    for block in blocks:
        if kind == "perm":
            factors.append(perm(block))
        elif kind == "assoc":
            rng.shuffle(block)
            factors.append(assoc(block))
        else:
            lam = rng.choice(compositions(len(block)))
            factors.append(orbit((lam, block)))
    out = unit(kind)
    for f in factors:
        out = product_elements(out, f)
    return out


def brion_coproduct(x, d: Decomposition) -> FormalSum:
    out = FormalSum()
    for (a, b), c in coproduct(x, d).items():
        out = out + tensor_product_sums(brion(a), brion(b)) * c
    return out


def _coassociative_at(z, R: frozenset, S: frozenset, T: frozenset) -> bool:
    lhs = FormalSum()
    for (a, b), c in coproduct(z, Decomposition(R | S, T)).items():
        lhs = lhs + tensor_product_sums(coproduct(a, Decomposition(R, S)), FormalSum.single(b)) * c
    rhs = FormalSum()
    for (a, b), c in coproduct(z, Decomposition(R, S | T)).items():
        rhs = rhs + tensor_product_sums(FormalSum.single(a), coproduct(b, Decomposition(S, T))) * c
    return lhs == rhs


def _compatible_at(x, y, d: Decomposition) -> bool:
    lhs = coproduct(product_elements(x, y), d)
    rhs = FormalSum()
    for (x1, x2), c in coproduct(x, Decomposition(d.S & x.ground, d.T & x.ground)).items():
        for (y1, y2), e in coproduct(y, Decomposition(d.S & y.ground, d.T & y.ground)).items():
            rhs = rhs + FormalSum.single((product_elements(x1, y1), product_elements(x2, y2)), c * e)
    return lhs == rhs
