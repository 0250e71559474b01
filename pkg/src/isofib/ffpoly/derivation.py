from __future__ import annotations

from ..errors import InvalidInput
from .poly import LaurentPoly, Poly


class Derivation1D:
    """The derivation g(t) * d/dt on k[t] or k[t, 1/t]."""

    def __init__(self, coeff):
        if not isinstance(coeff, (Poly, LaurentPoly)):
            raise InvalidInput("derivation coefficient must be a Poly or LaurentPoly")
        self.coeff = coeff
        self.ctx = coeff.ctx

    def __call__(self, f):
        return self.apply(f)

    def apply(self, f):
        if isinstance(self.coeff, Poly) and isinstance(f, Poly):
            return self.coeff * f.derivative()
        g = self.coeff if isinstance(self.coeff, LaurentPoly) else self.coeff.to_laurent()
        f = f if isinstance(f, LaurentPoly) else f.to_laurent()
        return g * f.derivative()

    def iterate(self, f, n: int):
        for _ in range(n):
            f = self.apply(f)
        return f

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __eq__(self, other):
        return isinstance(other, Derivation1D) and self.coeff == other.coeff

    def __hash__(self):
        return hash(self.coeff)

    def __repr__(self):
        return f"Derivation1D(({self.coeff}) d/dt)"


def derivation_pth_power(d: Derivation1D) -> Derivation1D:
    """delta^p, which in characteristic p is again a derivation.

    A derivation of k[t] is fixed by its value on t, so delta^p = h * d/dt
    with h obtained by applying delta p times to t.
    """
    ctx = d.ctx
    t = Poly.t(ctx) if isinstance(d.coeff, Poly) else LaurentPoly.monomial(ctx, 1)
    return Derivation1D(d.iterate(t, ctx.p))


def is_additive(d: Derivation1D) -> bool:
    """delta^p = 0, i.e. delta integrates to an alpha_p-action."""
    return derivation_pth_power(d).is_zero()


def is_multiplicative(d: Derivation1D) -> bool:
    """delta^p = delta, i.e. delta integrates to a mu_p-action."""
    return derivation_pth_power(d) == d
