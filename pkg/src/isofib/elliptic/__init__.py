"""Elliptic curves in Weierstrass form over finite fields: invariants, point
counts, supersingularity, automorphism groups, torsion group schemes."""

from .automorphism import (AutGroupDescriptor, CurveAutomorphism, aut_group, aut_order,
                           j_regime, legal_gamma_orders, maximal_abelian_orders,
                           solve_automorphisms, verify_automorphism, zeta)
from .catalogue import catalogue_generators, grid_curve, model, order_p_translation
from .curve import WeierstrassCurve, curve_with_j, parse_curve, parse_equation
from .torsion import (embeds_in_some_elliptic_curve, frobenius_kernel, is_subgroup_of_curve,
                      spec_fits_curve_type, torsion_structure)


def j_invariant(curve):
    return curve.j_invariant()


def point_count(curve, cap=None):
    return curve.point_count() if cap is None else curve.point_count(cap)


def is_supersingular(curve):
    return curve.is_supersingular()


__all__ = [
    "AutGroupDescriptor", "CurveAutomorphism", "WeierstrassCurve", "aut_group", "aut_order",
    "catalogue_generators", "curve_with_j", "grid_curve", "embeds_in_some_elliptic_curve", "frobenius_kernel",
    "is_subgroup_of_curve", "is_supersingular", "j_invariant", "j_regime", "legal_gamma_orders",
    "maximal_abelian_orders", "model", "order_p_translation", "parse_curve", "parse_equation",
    "point_count", "solve_automorphisms", "spec_fits_curve_type", "torsion_structure",
    "verify_automorphism", "zeta",
]
