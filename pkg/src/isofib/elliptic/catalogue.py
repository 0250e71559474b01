"""Explicit models and generators of maximal abelian automorphism subgroups
for j = 0 and j = 1728, plus the fixed models used by the classifier."""

from __future__ import annotations

from ..errors import InvalidInput
from ..ffpoly.field import FieldCtx, field
from .automorphism import CurveAutomorphism, zeta
from .curve import WeierstrassCurve, curve_with_j

# coefficient tuples (a1, a2, a3, a4, a6) over the prime field
Y2_X3_MINUS_X = (0, 0, 0, -1, 0)
Y2_X3_MINUS_1 = (0, 0, 0, 0, -1)
Y2_PLUS_Y_X3 = (0, 0, 1, 0, 0)
Y2_MINUS_Y_X3_MINUS_1 = (0, 0, -1, 0, -1)


def model(p: int, coeffs, ctx: FieldCtx | None = None) -> WeierstrassCurve:
    return WeierstrassCurve(ctx or field(p), *coeffs)


def _matches(curve, coeffs):
    return tuple(c.code for c in curve.coefficients) == tuple(curve.ctx.from_int(c) for c in coeffs)


def catalogue_generators(curve: WeierstrassCurve):
    """Listed generators when ``curve`` is literally one of the models, else None."""
    p = curve.p
    ctx = curve.ctx
    if p >= 5 and _matches(curve, Y2_X3_MINUS_X) and curve.j_invariant() == ctx(1728):
        F, z4 = zeta(ctx, 4)
        E = curve.base_change(F)
        return [CurveAutomorphism(E, -z4, name="gamma: (x,y) -> (-x, zeta4*y)")]
    if p >= 5 and _matches(curve, Y2_X3_MINUS_1):
        F, z3 = zeta(ctx, 3)
        E = curve.base_change(F)
        return [CurveAutomorphism(E, -(z3 * z3), name="gamma: (x,y) -> (zeta3*x, -y)")]
    if p == 3 and _matches(curve, Y2_X3_MINUS_X):
        F, z4 = zeta(ctx, 4)
        E = curve.base_change(F)
        return [
            CurveAutomorphism(E, -z4, name="gamma: (x,y) -> (-x, zeta4*y)"),
            CurveAutomorphism(E, -1, 1, name="gamma': (x,y) -> (x+1, -y)"),
        ]
    if p == 2 and _matches(curve, Y2_PLUS_Y_X3):
        F, z3 = zeta(ctx, 3)
        E = curve.base_change(F)
        return [
            CurveAutomorphism(E, z3 * z3, 0, 0, 1, name="gamma': (x,y) -> (zeta3*x, y+1)"),
            CurveAutomorphism(E, 1, 1, 1, z3, name="gamma: (x,y) -> (x+1, y+x+zeta3)"),
        ]
    return None


def order_p_translation(curve: WeierstrassCurve):
    """The order-p automorphism of the two additive special models:
    (x+1, y) on y^2 = x^3 - x over p = 3 and (x, y+1) on y^2 + y = x^3 over p = 2."""
    if curve.p == 3 and _matches(curve, Y2_X3_MINUS_X):
        return CurveAutomorphism(curve, 1, 1, name="(x,y) -> (x+1, y)")
    if curve.p == 2 and _matches(curve, Y2_PLUS_Y_X3):
        return CurveAutomorphism(curve, 1, 0, 0, 1, name="(x,y) -> (x, y+1)")
    return None


def grid_curve(p: int, j_class) -> WeierstrassCurve:
    """Representative curve over F_p for j-class "0", "1728" or "generic".

    1728 = 0 in characteristic 2 and 3, so "1728" gives the j = 0 model there;
    "generic" uses the smallest j outside {0, 1728}.
    """
    ctx = field(p, 1)
    key = str(j_class).strip().lower()
    if key == "0":
        return curve_with_j(ctx, 0)
    if key == "1728":
        return curve_with_j(ctx, 1728)
    if key != "generic":
        raise InvalidInput(f"j class must be 0, 1728 or generic, got {j_class!r}")
    special = {0, 1728 % p}
    j = next(v for v in range(1, p + 2) if v % p not in special)
    return curve_with_j(ctx, j)
