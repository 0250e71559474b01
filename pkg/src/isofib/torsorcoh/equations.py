from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import InvalidInput
from ..ffpoly.bivariate import BiPoly
from ..ffpoly.poly import LaurentPoly
from .classes import A1, A1_STAR, MU, P1, TorsorClass


@dataclass
class TorsorEquation:
    """x^p - f(t) over the base, with Jacobian and irreducibility verdicts."""

    cls: TorsorClass
    text: str
    smooth: bool
    irreducible: bool
    reason: str

    def to_json(self):
        return {"equation": self.text, "smooth": self.smooth, "irreducible": self.irreducible,
                "reason": self.reason, "class": self.cls.to_json()}


def class_function(cls: TorsorClass) -> LaurentPoly:
    """The function f with the torsor cut out by x^p = f."""
    ctx = cls.ctx
    if cls.rep is None:
        return LaurentPoly(ctx, 0, [])
    if cls.group == MU:
        return LaurentPoly.monomial(ctx, cls.rep)
    return cls.rep if isinstance(cls.rep, LaurentPoly) else cls.rep.to_laurent()


def equation_bipoly(cls: TorsorClass) -> BiPoly:
    """The equation as a polynomial in (x, t) = (BiPoly x, BiPoly y).

    On A1* the denominator t^N is cleared; t is a unit there, so the zero
    locus and the Jacobian verdict are unchanged.
    """
    ctx = cls.ctx
    f = class_function(cls)
    shift = max(0, -(f.min_exponent() or 0)) if not f.is_zero() else 0
    x, t = BiPoly.x(ctx), BiPoly.y(ctx)
    g = BiPoly(ctx, {(0, e + shift): c for e, c in f.term_codes().items()})
    lhs = x ** ctx.p
    if shift:
        lhs = lhs * (t ** shift)
    return lhs - g


def _has_root_on_base(h: LaurentPoly, base_kind: str) -> bool:
    """Whether h vanishes somewhere on A1 (resp. A1*) over the algebraic closure."""
    if h.is_zero():
        return True
    exps = h.exponents()
    if base_kind == A1_STAR:
        return len(exps) > 1
    # on A1 a polynomial has a root unless it is a nonzero constant
    return exps != [0]


def torsor_equation(cls: TorsorClass) -> TorsorEquation:
    kind = cls.base.kind
    if kind not in (A1, A1_STAR):
        if kind == P1:
            raise InvalidInput("H^1 over P1 is zero; only the trivial cover exists")
        raise InvalidInput("explicit equations are available over A1 and A1* only")
    p = cls.p
    f = class_function(cls)
    text = f"x^{p} - ({f})" if len(f.exponents()) > 1 else f"x^{p} - {f}"
    if cls.is_zero():
        one = "1" if cls.group == MU else "0"
        return TorsorEquation(cls, f"x^{p} - {one}", False, False,
                              "trivial class: the cover is G x base, non-reduced")
    if cls.group == MU:
        i = cls.rep
        irreducible = gcd(i, p) == 1
        return TorsorEquation(cls, text, True, irreducible,
                              f"d/dt t^{i} = {i} t^{i - 1} has no zero on A1*")
    df = f.derivative()
    singular = _has_root_on_base(df, kind)
    reason = (f"f' = {df} vanishes on the base" if singular
              else f"f' = {df} has no zero on the base")
    return TorsorEquation(cls, text, not singular, True, reason)
