"""Text grammar for basis elements and their duals.

::

    element  := product | product "*" | "(" product ")" "*"
    product  := factor (("×" | "x") factor)*
    factor   := kind "{" body "}"
    kind     := "perm" | "assoc" | "orbit" | "poset"
    perm     := [block ("|" block)*]            block := label ("," label)*
    assoc    := [order ("|" order)*]            order := label ("<" label)*
    orbit    := [group ("|" group)*]            group := "(" int ("," int)* ")" ":" block
    poset    := [item ("," item)*]              item  := label ("<" label)*
    label    := [A-Za-z0-9_]+

Whitespace between tokens is ignored. Products of posets are disjoint unions.
"""
from __future__ import annotations

from typing import Union

from .core import as_ground
from .dual import DualElement
from .hopf import KINDS, Element, poset_element, product_elements, unit
from .posets import Poset, UnlabeledPoset, canonical_form


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.message = message
        self.text = text
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            raise self.error(f"expected {token!r}")

    def done(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def label(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a label")
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a positive integer")
        value = int(self.text[start : self.pos])
        if value < 1:
            self.pos = start
            raise self.error("composition parts must be positive")
        return value

    def labels(self, sep: str) -> list[str]:
        out = [self.label()]
        while self.accept(sep):
            out.append(self.label())
        return out

    # -- grammar --------------------------------------------------------------------
    def element(self) -> Element | DualElement:
        if self.accept("("):
            x = self.product()
            self.expect(")")
            self.expect("*")
            result: Element | DualElement = DualElement(x)
        else:
            x = self.product()
            result = DualElement(x) if self.accept("*") else x
        if not self.done():
            raise self.error("unexpected trailing input")
        return result

    def product(self) -> Element:
        x = self.factor()
        while self.accept("×") or self.accept("x"):
            start = self.pos
            y = self.factor()
            if y.kind != x.kind:
                self.pos = start
                raise self.error(f"cannot multiply {x.kind} by {y.kind}")
            if x.ground & y.ground:
                self.pos = start
                raise self.error("factors share labels")
            x = product_elements(x, y)
        return x

    def factor(self) -> Element:
        self.skip()
        start = self.pos
        kind = next((k for k in KINDS if self.text.startswith(k, self.pos)), None)
        if kind is None:
            raise self.error(f"expected one of {', '.join(KINDS)}")
        self.pos += len(kind)
        self.expect("{")
        if self.accept("}"):
            return unit(kind)
        atoms = getattr(self, f"_{kind}")()
        self.expect("}")
        try:
            if kind == "poset":
                return atoms
            return Element.build(kind, atoms)
        except ValueError as exc:
            self.pos = start
            raise self.error(str(exc)) from None

    def _groups(self, read) -> list:
        out = [read()]
        while self.accept("|"):
            out.append(read())
        return out

    def _perm(self) -> list:
        return self._groups(lambda: self._distinct(self.labels(","), frozenset))

    def _assoc(self) -> list:
        return self._groups(lambda: self._distinct(self.labels("<"), tuple))

    def _orbit(self) -> list:
        def group():
            self.expect("(")
            lam = [self.integer()]
            while self.accept(","):
                lam.append(self.integer())
            self.expect(")")
            self.expect(":")
            start = self.pos
            block = self._distinct(self.labels(","), frozenset)
            if sum(lam) != len(block):
                self.pos = start
                raise self.error(f"composition {tuple(lam)} does not fit {len(block)} labels")
            return (block, tuple(lam))

        return self._groups(group)

    def _poset(self) -> Element:
        ground: set[str] = set()
        relations = []
        start = self.pos
        while True:
            chain = self.labels("<")
            ground.update(chain)
            relations.extend(zip(chain, chain[1:]))
            if not self.accept(","):
                break
        try:
            p = Poset(ground, relations)
        except ValueError as exc:
            self.pos = start
            raise self.error(str(exc)) from None
        return poset_element(p)

    def _distinct(self, labels: list[str], kind):
        if len(set(labels)) != len(labels):
            raise self.error("repeated label")
        return kind(labels)


def parse_element(text: str) -> Union[Element, DualElement]:
    """Parse ``perm{a,b|c}``, ``assoc{1<2<3}*``, ``orbit{(1,2):a,b,c}`` or ``poset{a<b,a<c}``."""
    return _Parser(text).element()


def parse_labels(text: str, ground: frozenset | None = None) -> frozenset:
    """Comma-separated labels, or a bare run of single-character labels.

    A bare word that is itself a label of ``ground`` is read as that label.
    """
    text = text.strip()
    if not text:
        return frozenset()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    elif ground is not None and text in ground:
        parts = [text]
    else:
        parts = list(text)
    if any(not p for p in parts):
        raise ParseError("empty label", text, 0)
    return as_ground(parts)


def parse_poset_class(text: str) -> UnlabeledPoset:
    """A poset written in the element grammar, taken up to isomorphism."""
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    x = parse_element(text)
    if not isinstance(x, Element) or x.kind != "poset":
        raise ParseError("expected a poset", text, 0)
    return canonical_form(x.to_poset())
