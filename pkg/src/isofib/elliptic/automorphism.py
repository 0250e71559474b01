"""Group automorphisms of Weierstrass curves (automorphisms fixing O).

Every such automorphism is (x, y) -> (u^2 x + r, u^3 y + s u^2 x + t).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..errors import InvalidAutomorphism, ResourceLimit
from ..ffpoly.bivariate import BiPoly
from ..ffpoly.field import TABLE_LIMIT, FieldCtx, field
from .curve import WeierstrassCurve

MAX_AUT_ORDER = 24


class CurveAutomorphism:
    def __init__(self, curve: WeierstrassCurve, u, r=0, s=0, t=0, name: str | None = None):
        ctx = curve.ctx
        self.curve = curve
        self.u, self.r, self.s, self.t = (ctx(v) for v in (u, r, s, t))
        if self.u.is_zero():
            raise InvalidAutomorphism("u must be a unit")
        self.name = name

    @classmethod
    def from_map(cls, curve, x_scale, x_shift, y_scale, y_xcoef=0, y_shift=0, name=None):
        """Build from (x, y) -> (x_scale x + x_shift, y_scale y + y_xcoef x + y_shift)."""
        ctx = curve.ctx
        x_scale, y_scale = ctx(x_scale), ctx(y_scale)
        if x_scale.is_zero() or y_scale.is_zero():
            raise InvalidAutomorphism("map is not invertible")
        u = y_scale / x_scale
        if u * u != x_scale:
            raise InvalidAutomorphism("x-scale and y-scale are not u^2 and u^3 for one u")
        return cls(curve, u, x_shift, ctx(y_xcoef) / x_scale, y_shift, name=name)

    @classmethod
    def negation(cls, curve):
        return cls(curve, -curve.ctx.one(), 0, -curve.a1, -curve.a3, name="-1")

    @classmethod
    def identity(cls, curve):
        return cls(curve, 1, name="id")

    @property
    def params(self):
        return (self.u, self.r, self.s, self.t)

    def substitution(self):
        """(X(x, y), Y(x, y)) as bivariate polynomials."""
        ctx = self.curve.ctx
        x, y = BiPoly.x(ctx), BiPoly.y(ctx)
        u2 = self.u * self.u
        X = x * u2 + self.r
        Y = y * (u2 * self.u) + x * (self.s * u2) + self.t
        return X, Y

    def apply(self, P):
        if P is None:
            return None
        x, y = P
        u2 = self.u * self.u
        return (u2 * x + self.r, u2 * self.u * y + self.s * u2 * x + self.t)

    __call__ = apply

    def compose(self, other: "CurveAutomorphism") -> "CurveAutomorphism":
        """self o other (apply other first)."""
        u1, r1, s1, t1 = self.params
        u2, r2, s2, t2 = other.params
        u = u1 * u2
        r = u1 * u1 * r2 + r1
        s = u1 * s2 + s1
        t = u1 ** 3 * t2 + s1 * u1 * u1 * r2 + t1
        return CurveAutomorphism(self.curve, u, r, s, t)

    def inverse(self) -> "CurveAutomorphism":
        u, r, s, t = self.params
        ui = u.inverse()
        return CurveAutomorphism(self.curve, ui, -r * ui * ui, -s * ui, (r * s - t) * ui ** 3)

    def is_identity(self) -> bool:
        return self.u == 1 and self.r.is_zero() and self.s.is_zero() and self.t.is_zero()

    def order(self, limit: int = MAX_AUT_ORDER) -> int | None:
        g = self
        for n in range(1, limit + 1):
            if g.is_identity():
                return n
            g = self.compose(g)
        return None

    def describe(self) -> str:
        X, Y = self.substitution()
        return f"(x, y) -> ({X}, {Y})"

    def key(self):
        return tuple(c.code for c in self.params)

    def __eq__(self, other):
        return (isinstance(other, CurveAutomorphism) and self.curve == other.curve
                and self.key() == other.key())

    def __hash__(self):
        return hash((self.curve, self.key()))

    def __repr__(self):
        tag = f"{self.name}: " if self.name else ""
        return f"CurveAutomorphism({tag}{self.describe()} over F_{self.curve.ctx.q})"

    def to_json(self):
        out = {
            "map": self.describe(),
            "u": self.u.to_json(), "r": self.r.to_json(), "s": self.s.to_json(), "t": self.t.to_json(),
            "field": {"p": self.curve.ctx.p, "k": self.curve.ctx.k, "modulus": list(self.curve.ctx.modulus)},
        }
        if self.name:
            out["name"] = self.name
        return out


def verify_automorphism(curve: WeierstrassCurve, aut: CurveAutomorphism):
    """Substitute the map into the curve equation and compare exactly.

    Returns (valid, order); order is 0 when the map is not an automorphism.
    """
    E = curve
    if aut.curve.ctx != E.ctx:
        E = E.base_change(aut.curve.ctx)
    F = E.equation()
    X, Y = aut.substitution()
    u6 = aut.u ** 6
    ok = F.substitute(X, Y) == F.scale(u6)
    if not ok:
        return False, 0
    n = CurveAutomorphism(E, *aut.params).order()
    return n is not None, n or 0


# -- solving for all automorphisms over a given field -------------------------

def _residuals(ctx, a, u, r, s, t):
    a1, a2, a3, a4, a6 = a
    add, sub, mul = ctx.add, ctx.sub, ctx.mul
    two, three = ctx.from_int(2), ctx.from_int(3)
    u2 = mul(u, u)
    u3 = mul(u2, u)
    u4 = mul(u2, u2)
    u6 = mul(u3, u3)
    e1 = sub(add(a1, mul(two, s)), mul(u, a1))
    e2 = sub(sub(add(sub(a2, mul(s, a1)), mul(three, r)), mul(s, s)), mul(u2, a2))
    e3 = sub(add(add(a3, mul(r, a1)), mul(two, t)), mul(u3, a3))
    e4 = a4
    e4 = sub(e4, mul(s, a3))
    e4 = add(e4, mul(two, mul(r, a2)))
    e4 = sub(e4, mul(add(t, mul(r, s)), a1))
    e4 = add(e4, mul(three, mul(r, r)))
    e4 = sub(e4, mul(two, mul(s, t)))
    e4 = sub(e4, mul(u4, a4))
    e6 = add(a6, mul(r, a4))
    e6 = add(e6, mul(mul(r, r), a2))
    e6 = add(e6, mul(mul(r, r), r))
    e6 = sub(e6, mul(t, a3))
    e6 = sub(e6, mul(t, t))
    e6 = sub(e6, mul(mul(r, t), a1))
    e6 = sub(e6, mul(u6, a6))
    return e1, e2, e3, e4, e6


def solve_automorphisms(curve: WeierstrassCurve) -> list[CurveAutomorphism]:
    """All automorphisms fixing O that are defined over curve.ctx.

    Unknowns are solved where the equations are linear with invertible
    leading coefficient and scanned over the field otherwise.
    """
    ctx = curve.ctx
    q = ctx.q
    a = tuple(c.code for c in curve.coefficients)
    a1, a2, a3, a4, a6 = a
    add, sub, mul, div = ctx.add, ctx.sub, ctx.mul, ctx.div
    two, three = ctx.from_int(2), ctx.from_int(3)
    units = [u for u in range(1, q) if ctx.power(u, MAX_AUT_ORDER) == 1]
    found = []
    for u in units:
        u2 = mul(u, u)
        u3 = mul(u2, u)
        if two:
            s_cands = [div(sub(mul(u, a1), a1), two)]
        else:
            s_cands = range(q) if mul(u, a1) == a1 else []
        for s in s_cands:
            if three:
                r_cands = [div(add(add(sub(mul(u2, a2), a2), mul(s, a1)), mul(s, s)), three)]
            else:
                if _residuals(ctx, a, u, 0, s, 0)[1]:
                    continue
                r_cands = range(q)
            for r in r_cands:
                if two:
                    t_cands = [div(sub(sub(mul(u3, a3), a3), mul(r, a1)), two)]
                else:
                    if _residuals(ctx, a, u, r, s, 0)[2]:
                        continue
                    lin = add(a1, mul(two, s))
                    if lin:
                        # residual of the a4 equation is c - t*lin
                        c = _residuals(ctx, a, u, r, s, 0)[3]
                        t_cands = [div(c, lin)]
                    else:
                        if _residuals(ctx, a, u, r, s, 0)[3]:
                            continue
                        t_cands = range(q)
                for t in t_cands:
                    if not any(_residuals(ctx, a, u, r, s, t)):
                        found.append(CurveAutomorphism(curve, ctx.from_code(u), ctx.from_code(r),
                                                       ctx.from_code(s), ctx.from_code(t)))
    return found


# -- the automorphism group ---------------------------------------------------

def j_regime(curve: WeierstrassCurve) -> str:
    """'j0' (includes 1728 when p in {2, 3}), 'j1728' or 'generic'."""
    j = curve.j_invariant()
    if j.is_zero():
        return "j0"
    if curve.p >= 5 and j == curve.ctx(1728):
        return "j1728"
    return "generic"


def aut_order(p: int, regime: str) -> int:
    if regime == "generic":
        return 2
    if regime == "j1728":
        return 4
    if p == 2:
        return 24
    if p == 3:
        return 12
    return 6


def maximal_abelian_orders(p: int, regime: str) -> list[int]:
    if regime == "j0" and p in (2, 3):
        return [4, 6]
    return [aut_order(p, regime)]


def legal_gamma_orders(p: int, regime: str) -> list[int]:
    """Orders of cyclic subgroups of the automorphism group."""
    out = set()
    for m in maximal_abelian_orders(p, regime):
        out.update(d for d in range(1, m + 1) if m % d == 0)
    return sorted(out)


@dataclass
class AutGroupDescriptor:
    curve: WeierstrassCurve
    order: int
    is_cyclic: bool
    generators: list = dc_field(default_factory=list)
    maximal_abelian_orders: list = dc_field(default_factory=list)
    regime: str = "generic"
    source: str = ""

    def to_json(self):
        return {
            "p": self.curve.p,
            "j": self.curve.j_invariant().to_json(),
            "regime": self.regime,
            "order": self.order,
            "is_cyclic": self.is_cyclic,
            "maximal_abelian_orders": list(self.maximal_abelian_orders),
            "generators": [dict(g.to_json(), order=g.order()) for g in self.generators],
            "generator_source": self.source,
        }


def smallest_field_with_roots(ctx: FieldCtx, n: int) -> FieldCtx:
    """Smallest extension of ctx whose multiplicative group has an element of order n."""
    m = 1
    while (ctx.q ** m - 1) % n:
        m += 1
        if ctx.q ** m > TABLE_LIMIT:
            raise ResourceLimit(f"no extension of F_{ctx.q} within limits contains zeta_{n}")
    return ctx if m == 1 else field(ctx.p, ctx.k * m)


def zeta(ctx: FieldCtx, n: int):
    """(field, zeta_n): the smallest element of exact order n in the smallest
    extension that contains one."""
    F = smallest_field_with_roots(ctx, n)
    return F, F.root_of_unity(n)


def aut_group(curve: WeierstrassCurve) -> AutGroupDescriptor:
    from .catalogue import catalogue_generators

    p = curve.p
    regime = j_regime(curve)
    order = aut_order(p, regime)
    desc = AutGroupDescriptor(curve=curve, order=order, is_cyclic=order <= 6,
                              maximal_abelian_orders=maximal_abelian_orders(p, regime), regime=regime)
    if regime == "generic":
        desc.generators = [CurveAutomorphism.negation(curve)]
        desc.source = "negation"
        return desc
    listed = catalogue_generators(curve)
    if listed is not None:
        desc.generators = listed
        desc.source = "catalogue"
        return desc
    desc.generators = _search_generators(curve, order, desc.maximal_abelian_orders)
    desc.source = "search"
    return desc


def _search_generators(curve, order, wanted_orders):
    ctx = curve.ctx
    m = 1
    while True:
        if ctx.q ** m > TABLE_LIMIT:
            raise ResourceLimit("automorphisms are not all defined over a field within limits")
        F = ctx if m == 1 else field(ctx.p, ctx.k * m)
        sols = solve_automorphisms(curve.base_change(F))
        if len(sols) > order:
            raise AssertionError(f"found {len(sols)} automorphisms, more than {order}")
        if len(sols) == order:
            gens = []
            for n in sorted(wanted_orders, reverse=True):
                cands = sorted((g for g in sols if g.order() == n), key=CurveAutomorphism.key)
                if not cands:
                    raise AssertionError(f"no automorphism of order {n}")
                gens.append(cands[0])
            return gens
        m += 1
