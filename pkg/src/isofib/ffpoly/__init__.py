"""Finite fields, polynomials and one-variable derivations in characteristic p."""

from .bivariate import BiPoly
from .derivation import Derivation1D, derivation_pth_power, is_additive, is_multiplicative
from .field import Embedding, FieldCtx, FieldElement, embedding, field, is_prime
from .parse import parse_field_element, parse_laurent, parse_poly
from .poly import LaurentPoly, Poly, canonical_mod_pth, compose_affine, in_pth_power_subring

__all__ = [
    "BiPoly", "Derivation1D", "Embedding", "FieldCtx", "FieldElement", "LaurentPoly", "Poly",
    "canonical_mod_pth", "compose_affine", "derivation_pth_power", "embedding", "field",
    "in_pth_power_subring", "is_additive", "is_multiplicative", "is_prime",
    "parse_field_element", "parse_laurent", "parse_poly",
]
