"""Exact formal linear combinations over hashable basis keys.

Coefficients are :class:`fractions.Fraction` values. Basis keys may carry a
``ground`` attribute (a frozenset of labels); sums refuse to mix keys living
on different ground sets.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple

Rational = Fraction
Label = str


def label_key(label: Label) -> tuple:
    """Natural sort key: numeric labels first, by value, then the rest."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def ordered(labels: Iterable[Any]) -> tuple[Label, ...]:
    return tuple(sorted((str(x) for x in labels), key=label_key))


def as_ground(labels: Iterable[Any]) -> frozenset[Label]:
    return frozenset(str(x) for x in labels)


class Decomposition(NamedTuple):
    """An ordered decomposition ``I = S ⊔ T``."""

    S: frozenset
    T: frozenset

    @property
    def ground(self) -> frozenset:
        return self.S | self.T

    def is_trivial(self) -> bool:
        return not self.S or not self.T

    def swapped(self) -> "Decomposition":
        return Decomposition(self.T, self.S)


def decomposition(ground: Iterable[Any], S: Iterable[Any]) -> Decomposition:
    ground = as_ground(ground)
    S = as_ground(S)
    if not S <= ground:
        raise ValueError(f"{ordered(S - ground)} not in the ground set")
    return Decomposition(S, ground - S)


def enumerate_decompositions(ground: Iterable[Any]) -> list[Decomposition]:
    """All ``2**|I|`` ordered decompositions, starting with ``(∅, I)``."""
    labels = ordered(ground)
    full = frozenset(labels)
    out = []
    for mask in range(1 << len(labels)):
        S = frozenset(x for i, x in enumerate(labels) if mask >> i & 1)
        out.append(Decomposition(S, full - S))
    return out


def enumerate_triple_decompositions(ground: Iterable[Any]) -> Iterator[tuple[frozenset, frozenset, frozenset]]:
    """All ordered ``I = R ⊔ S ⊔ T`` (``3**|I|`` of them)."""
    labels = ordered(ground)
    n = len(labels)
    for code in range(3**n):
        parts: tuple[list, list, list] = ([], [], [])
        c = code
        for x in labels:
            parts[c % 3].append(x)
            c //= 3
        yield frozenset(parts[0]), frozenset(parts[1]), frozenset(parts[2])


def set_partitions(labels: Iterable[Any]) -> Iterator[list[frozenset]]:
    """Unordered set partitions into nonempty blocks, deterministic order."""
    labels = ordered(labels)
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for k in range(len(rest) + 1):
        for mates in combinations(rest, k):
            block = frozenset((first, *mates))
            remaining = [x for x in rest if x not in block]
            for tail in set_partitions(remaining):
                yield [block, *tail]


def sort_key(obj: Any) -> Any:
    """A total, label-natural sort key for basis keys and tensors of them."""
    if isinstance(obj, tuple):
        return (0, tuple(sort_key(x) for x in obj))
    if isinstance(obj, str):
        return (1, label_key(obj))
    if isinstance(obj, int):
        return (2, obj)
    key = getattr(obj, "sort_key", None)
    if key is None:
        raise TypeError(f"no ordering for {type(obj).__name__}")
    return (3, key())


def ground_of(key: Any) -> Any:
    if isinstance(key, tuple):
        return tuple(ground_of(k) for k in key)
    return getattr(key, "ground", None)


def _coerce(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact, got {type(value).__name__}")


class FormalSum:
    """A finitely supported map ``key -> Fraction`` with no zero entries.

    Immutable once built. Keys are compared structurally; all keys that
    expose a ground set must agree on it.
    """

    __slots__ = ("_terms", "_ground")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()):
        acc: dict[Hashable, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        ground = None
        for key, coeff in items:
            c = _coerce(coeff)
            if not c:
                continue
            ground = _check_ground(ground, key)
            acc[key] = acc.get(key, Fraction(0)) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._ground = ground if self._terms else None

    @classmethod
    def single(cls, key: Hashable, coeff: Any = 1) -> "FormalSum":
        return cls([(key, coeff)])

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    # -- mapping-ish access -------------------------------------------------
    def __getitem__(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.keys())

    def keys(self) -> list[Hashable]:
        return sorted(self._terms, key=sort_key)

    def items(self) -> list[tuple[Hashable, Fraction]]:
        return [(k, self._terms[k]) for k in self.keys()]

    def coefficients(self) -> list[Fraction]:
        return [c for _, c in self.items()]

    def total(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    @property
    def ground(self) -> Any:
        return self._ground

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        if self._ground is not None and other._ground is not None and self._ground != other._ground:
            raise ValueError("cannot add formal sums over different ground sets")
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return FormalSum(out)

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Any) -> "FormalSum":
        if isinstance(scalar, FormalSum):
            return NotImplemented
        c = _coerce(scalar)
        return FormalSum({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def map_keys(self, fn: Callable[[Hashable], Hashable]) -> "FormalSum":
        """Push forward along ``fn``, summing coefficients of colliding images."""
        return FormalSum((fn(k), v) for k, v in self._terms.items())

    def linear_map(self, fn: Callable[[Hashable], "FormalSum"]) -> "FormalSum":
        out = FormalSum()
        for k, v in self._terms.items():
            out = out + fn(k) * v
        return out

    # -- display / serialization -------------------------------------------
    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        return f"FormalSum({format_sum(self)})"

    def to_json(self) -> list[dict]:
        return [{"coeff": f"{c.numerator}/{c.denominator}", "key": encode_key(k)} for k, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "FormalSum":
        return cls((decode_key(entry["key"]), Fraction(entry["coeff"])) for entry in data)


def _check_ground(current: Any, key: Hashable) -> Any:
    g = ground_of(key)
    if g is None or (isinstance(g, tuple) and any(x is None for x in g)):
        return current
    if current is not None and current != g:
        raise ValueError("formal sum keys live on different ground sets")
    return g


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_key(key: Any) -> str:
    if isinstance(key, tuple):
        return " ⊗ ".join(format_key(k) for k in key)
    text = getattr(key, "to_text", None)
    return text() if text is not None else str(key)


def format_sum(s: FormalSum) -> str:
    if not s:
        return "0"
    parts = []
    for key, c in s.items():
        body = format_key(key)
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{format_coeff(c)}·{body}")
    return " + ".join(parts).replace("+ -", "- ")


# -- key codecs ---------------------------------------------------------------
_DECODERS: dict[str, Callable[[dict], Any]] = {}


def register_key_type(tag: str, decoder: Callable[[dict], Any]) -> None:
    _DECODERS[tag] = decoder


def encode_key(key: Any) -> Any:
    if isinstance(key, tuple):
        return {"type": "tensor", "factors": [encode_key(k) for k in key]}
    if isinstance(key, (str, int)):
        return key
    return key.to_json()


def decode_key(obj: Any) -> Any:
    if isinstance(obj, (str, int)):
        return obj
    tag = obj.get("type")
    if tag == "tensor":
        return tuple(decode_key(k) for k in obj["factors"])
    if tag not in _DECODERS:
        raise ValueError(f"unknown key type {tag!r}")
    return _DECODERS[tag](obj)
