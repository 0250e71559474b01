"""Derivations on E x A^1 of the form 1 (x) g(x) d/dx + delta_E (x) h(x), where
delta_E is the invariant vector field of E, and their extension over the
point at infinity of P^1.

delta_E is kept symbolic: it is nonzero everywhere, commutes with itself,
satisfies delta_E^p = 0 when E is supersingular, and contributes nothing to
degrees along the P^1 factor.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DegenerateDerivation, InvalidInput, NonExtendable
from ..ffpoly.derivation import Derivation1D, derivation_pth_power
from ..ffpoly.field import is_prime
from ..ffpoly.poly import LaurentPoly, Poly

AFFINE, INFINITY = "affine", "infinity"
KY_DEGREES = (0, -2)  # K of E x P^1 as (degree on E, degree on P^1)


def _laurent(f) -> LaurentPoly:
    if isinstance(f, Poly):
        return f.to_laurent()
    if not isinstance(f, LaurentPoly):
        raise InvalidInput("coefficients must be polynomials")
    return f


@dataclass
class ProductDerivation:
    curve: object
    affine_coeff: LaurentPoly
    elliptic_coeff: LaurentPoly
    chart: str = AFFINE

    def __post_init__(self):
        self.affine_coeff = _laurent(self.affine_coeff)
        self.elliptic_coeff = _laurent(self.elliptic_coeff)
        if self.chart not in (AFFINE, INFINITY):
            raise InvalidInput(f"unknown chart {self.chart!r}")

    @property
    def var(self):
        return "x" if self.chart == AFFINE else "t"

    @property
    def affine_part(self) -> Derivation1D:
        return Derivation1D(self.affine_coeff)

    def is_regular(self) -> bool:
        return all((f.min_exponent() or 0) >= 0 for f in (self.affine_coeff, self.elliptic_coeff)
                   if not f.is_zero())

    def vanishes_at_origin(self) -> bool:
        """Both components vanish at the chart origin (x = 0 or t = 0)."""
        return (self.affine_coeff.coeff(0).is_zero() and self.elliptic_coeff.coeff(0).is_zero())

    def is_nowhere_vanishing(self) -> bool:
        """No common zero of the two components on the chart.

        delta_E never vanishes, so the derivation only vanishes where h does
        and g does too; a nonzero constant h therefore suffices.
        """
        if not self.is_regular():
            return False
        h = self.elliptic_coeff
        if h.exponents() == [0]:
            return True
        return poly_gcd(self.affine_coeff.to_poly(), h.to_poly()).degree() == 0

    def is_additive(self) -> bool:
        """delta^p = 0, using delta_E^p = 0 and that delta_E commutes with 1 (x) g d/dx.

        With h constant the two summands commute, so delta^p is the sum of the
        p-th powers of the summands.
        """
        if self.elliptic_coeff.exponents() not in ([], [0]):
            raise InvalidInput("p-th power is only tracked for constant elliptic coefficient")
        return derivation_pth_power(self.affine_part).is_zero()

    def describe(self) -> str:
        v = self.var
        g = _fmt(self.affine_coeff, v)
        h = _fmt(self.elliptic_coeff, v)
        return f"1 (x) ({g}) d/d{v} + delta_E (x) ({h})"

    def to_json(self):
        return {"chart": self.chart, "affine_coeff": _fmt(self.affine_coeff, self.var),
                "elliptic_coeff": _fmt(self.elliptic_coeff, self.var), "text": self.describe()}


def _fmt(f: LaurentPoly, var: str) -> str:
    return str(f).replace("t", var) if var != "t" else str(f)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f


def vanishing_locus(d: Derivation1D):
    """Roots of the coefficient over the working field, as [(root, multiplicity)]."""
    f = d.coeff
    if f.is_zero():
        raise DegenerateDerivation("the zero derivation vanishes everywhere")
    if isinstance(f, LaurentPoly):
        if not f.is_polynomial():
            # t = 0 is not on the chart of a Laurent coefficient
            f = f.shift(-f.min_exponent())
        f = f.to_poly()
    ctx = f.ctx
    out = []
    for r in ctx.elements():
        lin = Poly.from_codes(ctx, [ctx.neg(r.code), 1])
        m = 0
        while f.degree() > 0:
            q, rem = f.divmod(lin)
            if not rem.is_zero():
                break
            f = q
            m += 1
        if m:
            out.append((r, m))
    return out


@dataclass
class Extension:
    generator: ProductDerivation
    rescale_exponent: int
    c1_p2_degree: int

    def to_json(self):
        return {"generator": self.generator.to_json(), "rescale_exponent": self.rescale_exponent,
                "c1_p2_degree": self.c1_p2_degree}


def substitute_infinity(d: ProductDerivation) -> ProductDerivation:
    """Rewrite in t = 1/x, where d/dx = -t^2 d/dt (no rescaling)."""
    if d.chart != AFFINE:
        raise InvalidInput("substitution starts from the affine chart")
    g = d.affine_coeff.substitute_inverse()
    h = d.elliptic_coeff.substitute_inverse()
    return ProductDerivation(d.curve, -(g.shift(2)), h, INFINITY)


def extend_to_infinity(d: ProductDerivation, max_exponent: int | None = None) -> Extension:
    """Generator at infinity t^m * d (t = 1/x) with m the unique exponent
    making it regular and not identically zero at t = 0.

    c_1 of the foliation on the P^1 factor is then -m.
    """
    if d.affine_coeff.is_zero() and d.elliptic_coeff.is_zero():
        raise DegenerateDerivation("zero derivation")
    p = d.affine_coeff.ctx.p
    bound = 2 * p if max_exponent is None else max_exponent
    raw = substitute_infinity(d)
    orders = [f.min_exponent() for f in (raw.affine_coeff, raw.elliptic_coeff) if not f.is_zero()]
    m = -min(orders)
    if abs(m) > bound:
        raise NonExtendable(f"regularizing at infinity needs t^{m}, beyond the bound {bound}")
    gen = ProductDerivation(d.curve, raw.affine_coeff.shift(m), raw.elliptic_coeff.shift(m), INFINITY)
    if not gen.is_regular() or gen.vanishes_at_origin():
        raise NonExtendable("no monomial rescaling gives a nonvanishing generator at t = 0")
    return Extension(gen, m, -m)


def back_to_affine(ext: Extension) -> ProductDerivation:
    """Substitute x = 1/t back; the result is x^(-m) times the input generator."""
    gen = ext.generator
    g = gen.affine_coeff.substitute_inverse()
    h = gen.elliptic_coeff.substitute_inverse()
    # d/dt = -x^2 d/dx
    return ProductDerivation(gen.curve, -(g.shift(2)), h, AFFINE)


def canonical_pullback_degree(p: int, ky_degree: int, c1_degree: int) -> int:
    """pi^* K_X = K_Y - (p - 1) c_1(F), on the P^1 factor."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"p = {p!r} is not a prime")
    return ky_degree - (p - 1) * c1_degree
