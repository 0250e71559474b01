from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..elliptic.catalogue import Y2_PLUS_Y_X3, Y2_X3_MINUS_X, model
from ..elliptic.curve import WeierstrassCurve
from ..errors import InvalidInput, SingularCurve
from ..ffpoly.field import field, is_prime
from ..ffpoly.poly import Poly
from .product import (KY_DEGREES, Extension, ProductDerivation, back_to_affine,
                      canonical_pullback_degree, extend_to_infinity)

ALBANESE_NOTE = "Albanese fibration: smoothness of its general fibre is not computed"


@dataclass
class FoliationData:
    generator_affine: ProductDerivation
    generator_infinity: ProductDerivation
    c1_p2_degree: int
    rescale_exponent: int

    def overlap_consistent(self) -> bool:
        """generator_infinity = t^m * generator_affine after t = 1/x."""
        back = back_to_affine(Extension(self.generator_infinity, self.rescale_exponent, self.c1_p2_degree))
        m = self.rescale_exponent
        a, b = self.generator_affine.affine_coeff, self.generator_affine.elliptic_coeff
        return back.affine_coeff == a.shift(-m) and back.elliptic_coeff == b.shift(-m)

    def to_json(self):
        return {"generator_affine": self.generator_affine.to_json(),
                "generator_infinity": self.generator_infinity.to_json(),
                "c1_p2_degree": self.c1_p2_degree, "rescale_exponent": self.rescale_exponent}


def supersingular_curve(p: int) -> WeierstrassCurve:
    """A supersingular curve over F_p: the catalogue model when it is one,
    otherwise the first supersingular short model in (a4, a6) order."""
    if p == 2:
        return model(2, Y2_PLUS_Y_X3)
    if p == 3:
        return model(3, Y2_X3_MINUS_X)
    F = field(p, 1)
    for a4 in range(p):
        for a6 in range(p):
            try:
                E = WeierstrassCurve(F, 0, 0, 0, a4, a6)
            except SingularCurve:
                continue
            if E.is_supersingular():
                return E
    raise InvalidInput(f"no supersingular short model over F_{p}")


def example_derivation(p: int) -> ProductDerivation:
    """1 (x) x^p d/dx + delta_E (x) 1 on E x A^1 with E supersingular."""
    F = field(p, 1)
    return ProductDerivation(supersingular_curve(p), Poly.monomial(F, p), Poly.constant(F, 1))


def foliation_data(d: ProductDerivation) -> FoliationData:
    ext = extend_to_infinity(d)
    return FoliationData(d, ext.generator, ext.c1_p2_degree, ext.rescale_exponent)


@dataclass
class KodairaVerdict:
    p: int
    pullback_degree: int
    nef: bool
    kappa: object  # 1, or "unasserted", or None when K is not nef
    verdict: str
    trace: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {"p": self.p, "pullback_degree": self.pullback_degree, "nef": self.nef,
                "kappa": self.kappa, "verdict": self.verdict, "trace": self.trace}


def example_kodaira(p: int) -> KodairaVerdict:
    """Quotient of E x P^1 by the foliation generated by x^p d/dx + delta_E."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"p = {p!r} is not a prime")
    d = example_derivation(p)
    data = foliation_data(d)
    deg = canonical_pullback_degree(p, KY_DEGREES[1], data.c1_p2_degree)
    trace = {
        "curve": d.curve.to_text(),
        "input": d.to_json(),
        "additive": d.is_additive(),
        "generator_infinity": data.generator_infinity.to_json(),
        "rescale_exponent": data.rescale_exponent,
        "c1_p2_degree": data.c1_p2_degree,
        "KY_p2_degree": KY_DEGREES[1],
        "pullback_degree": deg,
    }
    if deg > 0:
        trace["note"] = ALBANESE_NOTE
        return KodairaVerdict(p, deg, True, 1, "kappa = 1", trace)
    if deg == 0:
        return KodairaVerdict(p, deg, True, "unasserted", "K nef with pullback degree 0; kappa not asserted",
                              trace)
    return KodairaVerdict(p, deg, False, None, "not nef", trace)
