"""Linear orders, compositions and rooted binary trees.

A rooted binary tree is either ``None`` (the empty tree) or a pair
``(left, right)`` of rooted binary trees. Internal vertices are addressed by
their path from the root, a string over ``"L"``/``"R"`` (the root is ``""``).
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import NamedTuple, Optional, Sequence, Tuple

LinearOrder = Tuple[str, ...]
Composition = Tuple[int, ...]
BinaryTree = Optional[Tuple["BinaryTree", "BinaryTree"]]


# -- linear orders ------------------------------------------------------------
def linear_order(labels: Sequence) -> LinearOrder:
    order = tuple(str(x) for x in labels)
    if len(set(order)) != len(order):
        raise ValueError(f"repeated label in order {order}")
    return order


def block_insertions(ell: Sequence, m: Sequence) -> list[LinearOrder]:
    """Insert ``m`` contiguously into ``ell`` after position ``i = 0..|ell|``."""
    ell, m = linear_order(ell), linear_order(m)
    if not ell or not m:
        raise ValueError("block insertion needs two nonempty orders")
    if set(ell) & set(m):
        raise ValueError("block insertion needs disjoint ground sets")
    return [ell[:i] + m + ell[i:] for i in range(len(ell) + 1)]


def maximal_intervals(order: Sequence, subset) -> list[LinearOrder]:
    """The maximal runs of ``order`` whose entries all lie in ``subset``."""
    runs: list[LinearOrder] = []
    current: list = []
    for x in order:
        if x in subset:
            current.append(x)
        elif current:
            runs.append(tuple(current))
            current = []
    if current:
        runs.append(tuple(current))
    return runs


# -- compositions -------------------------------------------------------------
def composition(parts: Sequence[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def concatenate(alpha: Sequence[int], beta: Sequence[int]) -> Composition:
    return composition(alpha) + composition(beta)


def near_concatenate(alpha: Sequence[int], beta: Sequence[int]) -> Composition:
    alpha, beta = composition(alpha), composition(beta)
    if not alpha or not beta:
        raise ValueError("near-concatenation needs two nonempty compositions")
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


class CompositionSplit(NamedTuple):
    left: Composition
    right: Composition
    near: bool  # True when left ⊙ right recovers the input, else left · right

    def join(self) -> Composition:
        if self.near:
            return near_concatenate(self.left, self.right)
        return concatenate(self.left, self.right)


def split_composition(alpha: Sequence[int], s: int) -> CompositionSplit:
    """The unique split of ``alpha`` whose left part has size ``s``.

    Cutting on a part boundary gives a concatenation split; cutting inside a
    part divides that part between the two sides (near-concatenation).
    """
    alpha = composition(alpha)
    if not 0 < s < sum(alpha):
        raise ValueError(f"split size {s} out of range for {alpha}")
    running = 0
    for i, part in enumerate(alpha):
        if running + part == s:
            return CompositionSplit(alpha[: i + 1], alpha[i + 1 :], False)
        if running + part > s:
            inside = s - running
            return CompositionSplit(alpha[:i] + (inside,), (part - inside,) + alpha[i + 1 :], True)
        running += part
    raise AssertionError("unreachable")


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n`` (``2**(n-1)`` of them for ``n >= 1``)."""
    if n == 0:
        return [()]
    out = []
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


def multinomial(parts: Sequence[int]) -> int:
    total, out = 0, 1
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


# -- rooted binary trees ------------------------------------------------------
def tree_size(tree: BinaryTree) -> int:
    if tree is None:
        return 0
    return 1 + tree_size(tree[0]) + tree_size(tree[1])


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    return tuple((left, right) for i in range(n) for left in _trees(i) for right in _trees(n - 1 - i))


def enumerate_trees(n: int) -> list[BinaryTree]:
    """All rooted binary trees with ``n`` internal vertices (root + split order)."""
    if n < 1:
        raise ValueError("trees need at least one internal vertex")
    return list(_trees(n))


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def inorder_paths(tree: BinaryTree, prefix: str = "") -> list[str]:
    if tree is None:
        return []
    return inorder_paths(tree[0], prefix + "L") + [prefix] + inorder_paths(tree[1], prefix + "R")


def binary_search_labeling(tree: BinaryTree, ell: Sequence) -> dict[str, str]:
    """Map each internal vertex (by path) to its binary-search label.

    The internal vertex sitting between leaves ``ell[i-1]`` and ``ell[i]`` is
    the i-th vertex of an in-order traversal.
    """
    ell = linear_order(ell)
    paths = inorder_paths(tree)
    if len(paths) != len(ell):
        raise ValueError(f"tree has {len(paths)} internal vertices, order has {len(ell)} labels")
    return dict(zip(paths, ell))


def subtree(tree: BinaryTree, path: str) -> BinaryTree:
    for step in path:
        tree = tree[0] if step == "L" else tree[1]
    return tree


def loday_vertex(tree: BinaryTree, ell: Sequence) -> dict[str, int]:
    """Loday coordinates: label ``ell_i`` gets (left leaves) * (right leaves)."""
    labels = binary_search_labeling(tree, ell)
    coords = {}
    for path, label in labels.items():
        node = subtree(tree, path)
        coords[label] = (tree_size(node[0]) + 1) * (tree_size(node[1]) + 1)
    return coords


def tree_edges(tree: BinaryTree, prefix: str = "") -> list[tuple[str, str]]:
    """(parent path, child path) for every internal edge."""
    if tree is None:
        return []
    out = []
    for side, child in (("L", tree[0]), ("R", tree[1])):
        if child is not None:
            out.append((prefix, prefix + side))
            out.extend(tree_edges(child, prefix + side))
    return out


def left_comb(n: int) -> BinaryTree:
    tree: BinaryTree = None
    for _ in range(n):
        tree = (tree, None)
    return tree


def right_comb(n: int) -> BinaryTree:
    tree: BinaryTree = None
    for _ in range(n):
        tree = (None, tree)
    return tree


# Dyck-word encoding: empty -> "", node -> "(" + left + ")" + right.
def tree_to_string(tree: BinaryTree) -> str:
    if tree is None:
        return ""
    return "(" + tree_to_string(tree[0]) + ")" + tree_to_string(tree[1])


def tree_from_string(text: str) -> BinaryTree:
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if pos >= len(text) or text[pos] == ")":
            return None
        if text[pos] != "(":
            raise ValueError(f"unexpected {text[pos]!r} at {pos}")
        pos += 1
        left = parse()
        if pos >= len(text) or text[pos] != ")":
            raise ValueError(f"unbalanced tree string at {pos}")
        pos += 1
        right = parse()
        return (left, right)

    tree = parse()
    if pos != len(text):
        raise ValueError(f"trailing characters at {pos}")
    return tree

