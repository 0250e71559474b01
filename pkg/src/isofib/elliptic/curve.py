"""Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q."""

from __future__ import annotations

import json
import re

from ..errors import InvalidInput, ResourceLimit, SingularCurve
from ..ffpoly.bivariate import BiPoly
from ..ffpoly.field import FieldCtx, FieldElement, embedding, field
from ..ffpoly.poly import Poly

POINT_COUNT_CAP = 1 << 16


class WeierstrassCurve:
    def __init__(self, ctx: FieldCtx, a1=0, a2=0, a3=0, a4=0, a6=0):
        self.ctx = ctx
        self.a1, self.a2, self.a3, self.a4, self.a6 = (ctx(c) for c in (a1, a2, a3, a4, a6))
        if self.discriminant().is_zero():
            raise SingularCurve(f"discriminant vanishes for {self}")

    # -- invariants ------------------------------------------------------
    @property
    def p(self):
        return self.ctx.p

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c4(self):
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    def c6(self):
        b2, b4, b6, _ = self.b_invariants()
        return -(b2 ** 3) + 36 * b2 * b4 - 216 * b6

    def discriminant(self) -> FieldElement:
        b2, b4, b6, b8 = self.b_invariants()
        return -(b2 * b2 * b8) - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> FieldElement:
        return self.c4() ** 3 / self.discriminant()

    def equation(self) -> BiPoly:
        """F(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6."""
        ctx = self.ctx
        x, y = BiPoly.x(ctx), BiPoly.y(ctx)
        a1, a2, a3, a4, a6 = self.coefficients
        return y * y + x * y * a1 + y * a3 - x * x * x - x * x * a2 - x * a4 - a6

    def contains(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        a1, a2, a3, a4, a6 = self.coefficients
        return (y * y + a1 * x * y + a3 * y - (x ** 3 + a2 * x * x + a4 * x + a6)).is_zero()

    # -- group law -------------------------------------------------------
    def neg(self, P):
        if P is None:
            return None
        x, y = P
        return (x, -y - self.a1 * x - self.a3)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        a1, a2, a3, a4, a6 = self.coefficients
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if (y1 + y2 + a1 * x2 + a3).is_zero():
                return None
            lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
            nu = (-(x1 ** 3) + a4 * x1 + 2 * a6 - a3 * y1) / (2 * y1 + a1 * x1 + a3)
        else:
            lam = (y2 - y1) / (x2 - x1)
            nu = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = -(lam + a1) * x3 - nu - a3
        return (x3, y3)

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = None
        while n:
            if n & 1:
                R = self.add(R, P)
            P = self.add(P, P)
            n >>= 1
        return R

    def points(self):
        """Every F_q-point, infinity (None) first. Exhaustive over F_q x F_q."""
        if self.ctx.q ** 2 > POINT_COUNT_CAP * 64:
            raise ResourceLimit("point enumeration exceeds the cap")
        yield None
        for x in self.ctx.elements():
            for y in self.ctx.elements():
                if self.contains((x, y)):
                    yield (x, y)

    def point_count(self, cap: int = POINT_COUNT_CAP) -> int:
        """#E(F_q), counting the solutions in y for each x."""
        ctx = self.ctx
        q = ctx.q
        if q > cap:
            raise ResourceLimit(f"point counting over F_{q} exceeds cap {cap}")
        a1, a2, a3, a4, a6 = (c.code for c in self.coefficients)
        add, mul = ctx.add, ctx.mul
        total = 1
        if ctx.p != 2:
            squares = {mul(c, c) for c in range(q)}
            four = ctx.from_int(4)
            for x in range(q):
                u = add(mul(a1, x), a3)
                x2 = mul(x, x)
                r = add(add(add(mul(x2, x), mul(a2, x2)), mul(a4, x)), a6)
                d = add(mul(u, u), mul(four, r))
                total += 1 if d == 0 else (2 if d in squares else 0)
        else:
            for x in range(q):
                u = add(mul(a1, x), a3)
                x2 = mul(x, x)
                r = add(add(add(mul(x2, x), mul(a2, x2)), mul(a4, x)), a6)
                if u == 0:
                    total += 1
                    continue
                c = ctx.div(r, mul(u, u))
                # z^2 + z = c is solvable iff the absolute trace of c vanishes
                tr, acc = 0, c
                for _ in range(ctx.k):
                    tr = add(tr, acc)
                    acc = mul(acc, acc)
                total += 2 if tr == 0 else 0
        return total

    def trace_of_frobenius(self) -> int:
        return self.ctx.q + 1 - self.point_count()

    def hasse_invariant(self) -> FieldElement:
        """Coefficient of x^(p-1) in f(x)^((p-1)/2), where y^2 = f(x) is the
        square-completed model (odd p only)."""
        p = self.p
        if p == 2:
            raise InvalidInput("the x^(p-1) coefficient test needs odd p")
        ctx = self.ctx
        b2, b4, b6, _ = self.b_invariants()
        f = Poly(ctx, [b6 / 4, b4 / 2, b2 / 4, 1])
        return (f ** ((p - 1) // 2)).coeff(p - 1)

    def is_supersingular(self) -> bool:
        if self.p == 2:
            return self.j_invariant().is_zero()
        return self.hasse_invariant().is_zero()

    def is_ordinary(self) -> bool:
        return not self.is_supersingular()

    # -- changes of coordinates ------------------------------------------
    def transform(self, u, r, s, t) -> "WeierstrassCurve":
        """The curve E' with x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        ctx = self.ctx
        u, r, s, t = (ctx(v) for v in (u, r, s, t))
        a1, a2, a3, a4, a6 = self.coefficients
        n1 = (a1 + 2 * s) / u
        n2 = (a2 - s * a1 + 3 * r - s * s) / u ** 2
        n3 = (a3 + r * a1 + 2 * t) / u ** 3
        n4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4
        n6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6
        return WeierstrassCurve(ctx, n1, n2, n3, n4, n6)

    def short_form(self):
        """(E', (u, r, s, t)) with E' : y^2 = x^3 + A x + B; requires p >= 5."""
        if self.p < 5:
            raise InvalidInput("short Weierstrass form needs p >= 5")
        ctx = self.ctx
        a1, a2, a3, _, _ = self.coefficients
        s = -a1 / 2
        b2 = a1 * a1 + 4 * a2
        r = -b2 / 12
        t = -(a3 + r * a1) / 2
        params = (ctx.one(), r, s, t)
        return self.transform(*params), params

    def base_change(self, target: FieldCtx) -> "WeierstrassCurve":
        if target == self.ctx:
            return self
        emb = embedding(self.ctx, target)
        return WeierstrassCurve(target, *(emb(c) for c in self.coefficients))

    # -- misc --------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, WeierstrassCurve) and self.ctx == other.ctx
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.ctx, tuple(c.code for c in self.coefficients)))

    def __str__(self):
        a1, a2, a3, a4, a6 = self.coefficients
        lhs = ["y^2"]
        if a1:
            lhs.append(_term(a1, "xy"))
        if a3:
            lhs.append(_term(a3, "y"))
        rhs = ["x^3"]
        for c, m in ((a2, "x^2"), (a4, "x"), (a6, "")):
            if c:
                rhs.append(_term(c, m))
        return f"{' + '.join(lhs)} = {' + '.join(rhs)} over F_{self.ctx.q}"

    def __repr__(self):
        return f"WeierstrassCurve({self})"

    def to_text(self) -> str:
        coeffs = [c.to_json() for c in self.coefficients]
        text = f"p={self.ctx.p}; k={self.ctx.k}; a={json.dumps(coeffs, separators=(',', ':'))}"
        if self.ctx.k > 1 and self.ctx.modulus != field(self.ctx.p, self.ctx.k).modulus:
            text += f"; m={list(self.ctx.modulus)}"
        return text

    def to_json(self):
        return {
            "text": self.to_text(),
            "p": self.ctx.p,
            "k": self.ctx.k,
            "a": [c.to_json() for c in self.coefficients],
            "equation": str(self),
        }


def _term(c, mon):
    s = str(c)
    if "+" in s:
        s = f"({s})"
    if not mon:
        return s
    return mon if s == "1" else f"{s}{mon}"


# -- parsing -------------------------------------------------------------

_KV = re.compile(r"^\s*(\w+)\s*=\s*(.+?)\s*$")


def parse_curve(text: str) -> WeierstrassCurve:
    """Parse ``"p=3; k=1; a=[a1,a2,a3,a4,a6]"`` or ``"y^2+y=x^3; p=2"``.

    Coefficients are integers or coordinate vectors over the field basis.
    """
    if not isinstance(text, str):
        raise InvalidInput("curve must be given as text")
    fields_: dict = {}
    equation = None
    for piece in text.split(";"):
        piece = piece.strip()
        if not piece:
            continue
        if piece.lower().startswith("y"):
            equation = piece
            continue
        m = _KV.match(piece)
        if not m:
            raise InvalidInput(f"cannot parse curve field {piece!r}")
        fields_[m.group(1).lower()] = m.group(2)
    if "p" not in fields_:
        raise InvalidInput("curve text needs p=...")
    try:
        p = int(fields_["p"])
        k = int(fields_.get("k", 1))
        modulus = json.loads(fields_["m"]) if "m" in fields_ else None
    except ValueError as exc:
        raise InvalidInput(f"bad curve header in {text!r}") from exc
    ctx = field(p, k) if modulus is None else FieldCtx(p, k, modulus)
    if equation is not None:
        return parse_equation(equation, ctx)
    if "a" not in fields_:
        raise InvalidInput("curve text needs a=[a1,a2,a3,a4,a6] or an equation")
    try:
        coeffs = json.loads(fields_["a"])
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad coefficient list {fields_['a']!r}") from exc
    if not isinstance(coeffs, list) or len(coeffs) != 5:
        raise InvalidInput("a=[...] needs exactly five coefficients")
    return WeierstrassCurve(ctx, *coeffs)


_MONO = re.compile(r"([+-]?)\s*(\d*)\s*((?:[xy](?:\^\d+)?)*)")


def _side_terms(side: str):
    side = side.replace(" ", "").replace("*", "")
    if not side:
        raise InvalidInput("empty side of an equation")
    out = []
    pos = 0
    while pos < len(side):
        m = _MONO.match(side, pos)
        if not m or m.end() == pos:
            raise InvalidInput(f"cannot parse {side!r} near {side[pos:]!r}")
        sign, coef, mono = m.groups()
        if not coef and not mono:
            raise InvalidInput(f"dangling sign in {side!r}")
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        i = j = 0
        for var, e in re.findall(r"([xy])(?:\^(\d+))?", mono):
            e = int(e) if e else 1
            if var == "x":
                i += e
            else:
                j += e
        out.append(((i, j), c))
        pos = m.end()
    return out


def parse_equation(eq: str, ctx: FieldCtx) -> WeierstrassCurve:
    """Parse ``y^2 + y = x^3 - x`` style equations with integer coefficients."""
    if eq.count("=") != 1:
        raise InvalidInput(f"{eq!r} is not an equation")
    lhs, rhs = eq.split("=")
    coeffs: dict = {}
    for key, c in _side_terms(lhs):
        coeffs[key] = coeffs.get(key, 0) + c
    for key, c in _side_terms(rhs):
        coeffs[key] = coeffs.get(key, 0) - c
    allowed = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}
    p = ctx.p
    if any(key not in allowed and c % p for key, c in coeffs.items()):
        raise InvalidInput(f"{eq!r} is not in Weierstrass form")
    if coeffs.get((0, 2), 0) % p != 1 or coeffs.get((3, 0), 0) % p != (-1) % p:
        raise InvalidInput(f"{eq!r} must be normalized as y^2 + ... = x^3 + ...")
    return WeierstrassCurve(
        ctx,
        coeffs.get((1, 1), 0),
        -coeffs.get((2, 0), 0),
        coeffs.get((0, 1), 0),
        -coeffs.get((1, 0), 0),
        -coeffs.get((0, 0), 0),
    )


def curve_with_j(ctx: FieldCtx, j) -> WeierstrassCurve:
    """A curve over ctx with the given j-invariant (standard models)."""
    j = ctx(j)
    p = ctx.p
    if p == 2:
        if j.is_zero():
            return WeierstrassCurve(ctx, 0, 0, 1, 0, 0)
        return WeierstrassCurve(ctx, 1, 0, 0, 0, j.inverse())
    if p == 3:
        if j.is_zero():
            return WeierstrassCurve(ctx, 0, 0, 0, -1, 0)
        return WeierstrassCurve(ctx, 0, 1, 0, 0, -(j.inverse()))
    if j.is_zero():
        return WeierstrassCurve(ctx, 0, 0, 0, 0, -1)
    if j == ctx(1728):
        return WeierstrassCurve(ctx, 0, 0, 0, -1, 0)
    c = j * (ctx(1728) - j)
    return WeierstrassCurve(ctx, 0, 0, 0, 3 * c, 2 * c * (ctx(1728) - j))
