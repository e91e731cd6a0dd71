"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 parse or usage error,
3 a requested bound exceeds what the exhaustive checks support.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .core import Decomposition, FormalSum, format_sum
from .dual import DualElement, dual_product_bruteforce, dual_product_formula, lie_bracket
from .fock import TARGETS, brion_fock, dual_brion, unlabel_key
from .grammar import ParseError, parse_element, parse_labels, parse_poset_class
from .hopf import Element, brion, coproduct, product_elements
from .posets import Poset, UnlabeledPoset
from .verify import BoundError, random_checks, run_all, run_criterion

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_BOUND = 0, 1, 2, 3
BRION_BOUND = 8

# verify target -> acceptance criteria it runs
VERIFY_TARGETS: dict[str, tuple[int, ...]] = {
    "oracle": (1,),
    "chains": (2,),
    "rbt": (3,),
    "catalan": (4,),
    "orbit": (5,),
    "hopf-axioms": (6,),
    "brion-morphism": (7,),
    "dual-products": (8,),
    "lie-axioms": (9,),
    "witt": (10,),
    "primitives": (11,),
    "dual-brion": (12,),
    "loday": (13,),
}


class UsageError(Exception):
    pass


def _element(text: str) -> Element:
    x = parse_element(text)
    if not isinstance(x, Element):
        raise UsageError(f"expected a basis element, got the dual {x}")
    return x


def _dual(text: str) -> DualElement:
    x = parse_element(text)
    if not isinstance(x, DualElement):
        raise UsageError(f"expected a dual element (trailing '*'), got {x}")
    return x


def _emit(out: TextIO, result: FormalSum | Element, as_json: bool) -> None:
    if as_json:
        data = result.to_json()
        out.write(json.dumps(data, ensure_ascii=False) + "\n")
    else:
        out.write((format_sum(result) if isinstance(result, FormalSum) else result.to_text()) + "\n")


def _write_dot(path: str, result: FormalSum) -> None:
    graphs = []
    for i, key in enumerate(result.keys()):
        if isinstance(key, UnlabeledPoset):
            key = key.to_poset()
        if isinstance(key, Poset):
            graphs.append(key.to_dot(f"P{i}"))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(graphs))


def _decomposition(x: Element, S: str | None, T: str | None) -> Decomposition:
    if S is None and T is None:
        raise UsageError("give --S or --T")
    ground = x.ground
    left = parse_labels(S, ground) if S is not None else ground - parse_labels(T, ground)
    right = parse_labels(T, ground) if T is not None else ground - left
    if left | right != ground or left & right:
        raise UsageError("--S and --T must split the element's labels")
    return Decomposition(left, right)


# -- verbs -----------------------------------------------------------------------------
def cmd_product(args, out: TextIO) -> int:
    x, y = _element(args.x), _element(args.y)
    if x.kind != y.kind or x.ground & y.ground:
        raise UsageError("product needs two elements of the same monoid on disjoint labels")
    _emit(out, product_elements(x, y), args.json)
    return EXIT_OK


def cmd_coproduct(args, out: TextIO) -> int:
    x = _element(args.x)
    _emit(out, coproduct(x, _decomposition(x, args.S, args.T)), args.json)
    return EXIT_OK


def cmd_brion(args, out: TextIO) -> int:
    x = _element(args.x)
    if x.kind == "poset":
        raise UsageError("the Brion map takes perm, assoc or orbit elements")
    if len(x.ground) > BRION_BOUND:
        raise BoundError(f"Brion map limited to {BRION_BOUND} labels")
    result = brion(x)
    if args.fock:
        if x.is_atomic():
            result = brion_fock(unlabel_key(x))
        else:
            result = result.map_keys(unlabel_key)
    _emit(out, result, args.json)
    if args.dot:
        _write_dot(args.dot, result)
    return EXIT_OK


def cmd_dual_product(args, out: TextIO) -> int:
    x, y = _dual(args.x), _dual(args.y)
    if args.bruteforce or not (x.is_atomic() and y.is_atomic()) or x.kind == "poset":
        if len(x.ground | y.ground) > 5:
            raise BoundError("brute-force dual product limited to 5 labels")
        result = dual_product_bruteforce(x, y)
    else:
        result = dual_product_formula(x, y)
    _emit(out, result, args.json)
    return EXIT_OK


def cmd_bracket(args, out: TextIO) -> int:
    x, y = _dual(args.x), _dual(args.y)
    if x.kind == "poset" and len(x.ground | y.ground) > 5:
        raise BoundError("poset brackets use brute force, limited to 5 labels")
    _emit(out, lie_bracket(x, y), args.json)
    return EXIT_OK


def cmd_dual_brion(args, out: TextIO) -> int:
    p = parse_poset_class(args.poset.rstrip("*"))
    if p.size > 12:
        raise BoundError("canonical forms limited to 12 elements")
    _emit(out, dual_brion(p, args.target), args.json)
    if args.dot:
        _write_dot(args.dot, FormalSum.single(p))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.target == "random":
        results = [random_checks(args.seed, args.samples)]
    elif args.target == "all":
        results = run_all(args.max_n, args.max_grade)
    else:
        results = [run_criterion(k, args.max_n, args.max_grade, strict=True) for k in VERIFY_TARGETS[args.target]]
    if args.json:
        rows = [{"criterion": r.number, "title": r.title, "passed": r.passed, "details": r.details} for r in results]
        out.write(json.dumps(rows, ensure_ascii=False) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} passed\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brionhopf", description="Hopf monoids of polytopes and the Brion map.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="print a JSON formal sum")
        p.set_defaults(handler=handler)
        return p

    p = add("product", cmd_product, "product of two basis elements")
    p.add_argument("x")
    p.add_argument("y")

    p = add("coproduct", cmd_coproduct, "coproduct at a decomposition S ⊔ T")
    p.add_argument("x")
    p.add_argument("--S", help="labels of S (comma separated, or one character each)")
    p.add_argument("--T", help="labels of T")

    p = add("brion", cmd_brion, "Brion map to posets")
    p.add_argument("x")
    p.add_argument("--fock", action="store_true", help="unlabeled (graded) image")
    p.add_argument("--dot", help="write the poset terms as DOT graphs to this file")

    p = add("dual-product", cmd_dual_product, "product of two dual elements")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--bruteforce", action="store_true", help="dualize the coproduct over the whole basis")

    p = add("bracket", cmd_bracket, "Lie bracket of two primitive duals")
    p.add_argument("x")
    p.add_argument("y")

    p = add("dual-brion", cmd_dual_brion, "dual Brion map on a connected poset class")
    p.add_argument("poset")
    p.add_argument("--target", required=True, choices=sorted(TARGETS))
    p.add_argument("--dot", help="write the poset as a DOT graph to this file")

    p = add("verify", cmd_verify, "run acceptance checks")
    p.add_argument("target", choices=[*VERIFY_TARGETS, "all", "random"])
    p.add_argument("--max-n", type=int, help="size bound (capped at each check's default under 'all')")
    p.add_argument("--max-grade", type=int, help="grade bound for the Witt bracket")
    p.add_argument("--seed", type=int, default=0, help="seed for 'verify random'")
    p.add_argument("--samples", type=int, default=50, help="samples for 'verify random'")
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.handler(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except BoundError as exc:
        err.write(f"bound exceeded: {exc}\n")
        return EXIT_BOUND
    except (UsageError, ValueError, TypeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
