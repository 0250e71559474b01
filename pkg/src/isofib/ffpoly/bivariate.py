from __future__ import annotations

from .field import FieldCtx, FieldElement


class BiPoly:
    """Sparse polynomial in two variables, keyed by exponent pairs (i, j) of x^i y^j."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms=None):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def x(cls, ctx):
        return cls(ctx, {(1, 0): 1})

    @classmethod
    def y(cls, ctx):
        return cls(ctx, {(0, 1): 1})

    @classmethod
    def const(cls, ctx, c):
        return cls(ctx, {(0, 0): ctx.code_of(c)})

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(self.ctx, other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = self.ctx.add(out.get(k, 0), v)
        return BiPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.ctx, {k: self.ctx.neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        ctx = self.ctx
        out: dict = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in o.terms.items():
                key = (i + k, j + l)
                out[key] = ctx.add(out.get(key, 0), ctx.mul(a, b))
        return BiPoly(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BiPoly.const(self.ctx, 1)
        for _ in range(e):
            result = result * self
        return result

    def substitute(self, X: "BiPoly", Y: "BiPoly") -> "BiPoly":
        """self(X(x, y), Y(x, y))."""
        ctx = self.ctx
        out = BiPoly(ctx)
        xpow = {0: BiPoly.const(ctx, 1)}
        ypow = {0: BiPoly.const(ctx, 1)}
        for (i, j), c in self.terms.items():
            for n, table, base in ((i, xpow, X), (j, ypow, Y)):
                while max(table) < n:
                    m = max(table)
                    table[m + 1] = table[m] * base
            out = out + BiPoly(ctx, {(0, 0): c}) * xpow[i] * ypow[j]
        return out

    def dx(self) -> "BiPoly":
        ctx = self.ctx
        return BiPoly(ctx, {(i - 1, j): ctx.mul(ctx.from_int(i), c) for (i, j), c in self.terms.items() if i})

    def dy(self) -> "BiPoly":
        ctx = self.ctx
        return BiPoly(ctx, {(i, j - 1): ctx.mul(ctx.from_int(j), c) for (i, j), c in self.terms.items() if j})

    def evaluate(self, x, y) -> FieldElement:
        ctx = self.ctx
        xc, yc = ctx.code_of(x), ctx.code_of(y)
        acc = 0
        for (i, j), c in self.terms.items():
            acc = ctx.add(acc, ctx.mul(c, ctx.mul(ctx.power(xc, i), ctx.power(yc, j))))
        return FieldElement(ctx, acc)

    def scale(self, c) -> "BiPoly":
        code = self.ctx.code_of(c)
        return BiPoly(self.ctx, {k: self.ctx.mul(code, v) for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        ctx = self.ctx
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1])):
            mon = "".join(s for s in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ))
            coef = ctx.fmt_code(c)
            if "+" in coef:
                coef = f"({coef})"
            parts.append(coef if not mon else (mon if coef == "1" else f"{coef}{mon}"))
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__
