"""Foliations on E x P^1 given by product derivations, and the canonical
class of the quotient."""

from .example import (ALBANESE_NOTE, FoliationData, KodairaVerdict, example_derivation,
                      example_kodaira, foliation_data, supersingular_curve)
from .product import (AFFINE, INFINITY, KY_DEGREES, Extension, ProductDerivation, back_to_affine,
                      canonical_pullback_degree, extend_to_infinity, poly_gcd, substitute_infinity,
                      vanishing_locus)
