"""Hopf monoids of generalized permutahedra, posets, and the Brion map."""
from __future__ import annotations

from .core import Decomposition, FormalSum, decomposition
from .dual import DualElement, dual_coproduct, dual_product_bruteforce, dual_product_formula, is_primitive, lie_bracket
from .fock import UnlabeledElement, brion_fock, dual_brion, unlabel, verify_catalan, verify_catalan_parity, witt_bracket
from .geometry import LatticePolytope, brion_geometric, vertex_poset
from .grammar import ParseError, parse_element
from .hopf import Element, assoc, basis, brion, coproduct, orbit, perm, poset_element, product_elements, realize, unit
from .posets import Poset, UnlabeledPoset, canonical_form

__all__ = [
    "Decomposition",
    "DualElement",
    "Element",
    "FormalSum",
    "LatticePolytope",
    "ParseError",
    "Poset",
    "UnlabeledElement",
    "UnlabeledPoset",
    "assoc",
    "basis",
    "brion",
    "brion_fock",
    "brion_geometric",
    "canonical_form",
    "coproduct",
    "decomposition",
    "dual_brion",
    "dual_coproduct",
    "dual_product_bruteforce",
    "dual_product_formula",
    "is_primitive",
    "lie_bracket",
    "orbit",
    "parse_element",
    "perm",
    "poset_element",
    "product_elements",
    "realize",
    "unit",
    "unlabel",
    "verify_catalan",
    "verify_catalan_parity",
    "vertex_poset",
    "witt_bracket",
]
