"""Dense univariate polynomials and Laurent polynomials over a FieldCtx."""

from __future__ import annotations

from ..errors import InvalidAutomorphism, InvalidInput
from .field import FieldCtx, FieldElement


def _trim(codes: list) -> tuple:
    n = len(codes)
    while n and codes[n - 1] == 0:
        n -= 1
    return tuple(codes[:n])


def _fmt_terms(ctx, pairs, var="t") -> str:
    """Render (exponent, code) pairs, highest exponent first."""
    parts = []
    for e, c in sorted(pairs, key=lambda ec: -ec[0]):
        if c == 0:
            continue
        coef = ctx.fmt_code(c)
        if ctx.k > 1 and ("+" in coef or (e != 0 and not coef.isdigit())):
            coef = f"({coef})"
        if e == 0:
            parts.append(coef)
            continue
        mon = var if e == 1 else f"{var}^{e}"
        parts.append(mon if coef == "1" else f"{coef}{mon}")
    return " + ".join(parts) if parts else "0"


class Poly:
    """A polynomial in one variable; ``coeffs[i]`` is the code of the t^i term."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        self.ctx = ctx
        self.coeffs = _trim([ctx.code_of(c) for c in coeffs])

    @classmethod
    def from_codes(cls, ctx, codes) -> "Poly":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = _trim(list(codes))
        return obj

    @classmethod
    def monomial(cls, ctx, exponent: int, coeff=1) -> "Poly":
        if exponent < 0:
            raise InvalidInput("negative exponent in a polynomial")
        codes = [0] * exponent + [ctx.code_of(coeff)]
        return cls.from_codes(ctx, codes)

    @classmethod
    def t(cls, ctx) -> "Poly":
        return cls.monomial(ctx, 1)

    @classmethod
    def constant(cls, ctx, c) -> "Poly":
        return cls.from_codes(ctx, [ctx.code_of(c)])

    # -- basic queries -------------------------------------------------
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FieldElement:
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.ctx, c)

    def terms(self):
        """(exponent, FieldElement) for each nonzero term, low to high."""
        return [(i, FieldElement(self.ctx, c)) for i, c in enumerate(self.coeffs) if c]

    def exponents(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise InvalidInput("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return Poly.constant(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly.from_codes(ctx, out)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        return Poly.from_codes(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly.from_codes(ctx, [])
        out = [0] * (len(a) + len(b) - 1)
        mul, add = ctx.mul, ctx.add
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly.from_codes(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InvalidInput("negative power of a polynomial")
        result = Poly.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "Poly":
        code = self.ctx.code_of(c)
        mul = self.ctx.mul
        return Poly.from_codes(self.ctx, [mul(code, x) for x in self.coeffs])

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        r = list(self.coeffs)
        d = other.degree()
        inv_lead = ctx.inv(other.coeffs[-1])
        q = [0] * max(len(r) - d, 0)
        while len(r) - 1 >= d and r:
            c = ctx.mul(r[-1], inv_lead)
            shift = len(r) - 1 - d
            q[shift] = c
            for i, oc in enumerate(other.coeffs):
                r[shift + i] = ctx.sub(r[shift + i], ctx.mul(c, oc))
            r = list(_trim(r))
        return Poly.from_codes(ctx, q), Poly.from_codes(ctx, r)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x) -> FieldElement:
        ctx = self.ctx
        xc = ctx.code_of(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, xc), c)
        return FieldElement(ctx, acc)

    def derivative(self) -> "Poly":
        ctx = self.ctx
        return Poly.from_codes(ctx, [ctx.mul(ctx.from_int(i), c)
                                     for i, c in enumerate(self.coeffs)][1:])

    def frobenius_power(self) -> "Poly":
        """f^p computed by raising coefficients and exponents."""
        ctx = self.ctx
        p = ctx.p
        out = [0] * (p * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[p * i] = ctx.power(c, p)
        return Poly.from_codes(ctx, out)

    def map_coeffs(self, emb) -> "Poly":
        """Push coefficients through a field embedding."""
        return Poly.from_codes(emb.dst, [emb.code(c) for c in self.coeffs])

    def to_laurent(self) -> "LaurentPoly":
        return LaurentPoly.from_codes(self.ctx, 0, self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.to_laurent() == other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("poly", self.ctx, self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _fmt_terms(self.ctx, list(enumerate(self.coeffs)))


def compose_affine(f: Poly, a, b) -> Poly:
    """Return f(a*t + b); ``a`` must be nonzero."""
    ctx = f.ctx
    ac, bc = ctx.code_of(a), ctx.code_of(b)
    if ac == 0:
        raise InvalidAutomorphism("t -> a*t + b needs a != 0")
    add, mul = ctx.add, ctx.mul
    acc: list = []
    # Horner: acc <- acc*(a t + b) + c
    for c in reversed(f.coeffs):
        nxt = [0] * (len(acc) + 1)
        for i, x in enumerate(acc):
            if x:
                nxt[i] = add(nxt[i], mul(x, bc))
                nxt[i + 1] = add(nxt[i + 1], mul(x, ac))
        nxt[0] = add(nxt[0], c)
        acc = nxt
    return Poly.from_codes(ctx, acc)


def in_pth_power_subring(f) -> bool:
    """True iff f lies in k[t^p] (resp. k[t^{±p}] for Laurent input)."""
    p = f.ctx.p
    return all(e % p == 0 for e in f.exponents())


def canonical_mod_pth(f):
    """Representative of f modulo k[t^p]: drop exponents divisible by p."""
    p = f.ctx.p
    if isinstance(f, LaurentPoly):
        return LaurentPoly.from_terms(f.ctx, {e: c for e, c in f.term_codes().items() if e % p})
    return Poly.from_codes(f.ctx, [0 if i % p == 0 else c for i, c in enumerate(f.coeffs)])


class LaurentPoly:
    """sum_{i} coeffs[i] * t^(offset + i), normalized so the ends are nonzero."""

    __slots__ = ("ctx", "offset", "coeffs")

    def __init__(self, ctx: FieldCtx, offset: int = 0, coeffs=()):
        codes = [ctx.code_of(c) for c in coeffs]
        self._set(ctx, offset, codes)

    def _set(self, ctx, offset, codes):
        lo = 0
        while lo < len(codes) and codes[lo] == 0:
            lo += 1
        codes = _trim(list(codes[lo:]))
        self.ctx = ctx
        self.offset = offset + lo if codes else 0
        self.coeffs = codes

    @classmethod
    def from_codes(cls, ctx, offset, codes) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._set(ctx, offset, codes)
        return obj

    @classmethod
    def from_terms(cls, ctx, terms: dict) -> "LaurentPoly":
        """Build from {exponent: code}."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.from_codes(ctx, 0, [])
        lo, hi = min(terms), max(terms)
        codes = [0] * (hi - lo + 1)
        for e, c in terms.items():
            codes[e - lo] = c
        return cls.from_codes(ctx, lo, codes)

    @classmethod
    def monomial(cls, ctx, exponent: int, coeff=1) -> "LaurentPoly":
        return cls.from_codes(ctx, exponent, [ctx.code_of(coeff)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def term_codes(self) -> dict:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def terms(self):
        return [(e, FieldElement(self.ctx, c)) for e, c in sorted(self.term_codes().items())]

    def exponents(self) -> list[int]:
        return sorted(self.term_codes())

    def min_exponent(self):
        return self.offset if self.coeffs else None

    def max_exponent(self):
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, e: int) -> FieldElement:
        i = e - self.offset
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.ctx, c)

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.offset >= 0

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise InvalidInput(f"{self} has negative exponents")
        if not self.coeffs:
            return Poly.from_codes(self.ctx, [])
        return Poly.from_codes(self.ctx, [0] * self.offset + list(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ctx != self.ctx:
                raise InvalidInput("Laurent polynomials over different fields")
            return other
        if isinstance(other, Poly):
            return other.to_laurent()
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return LaurentPoly.monomial(self.ctx, 0, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        terms = self.term_codes()
        for e, c in o.term_codes().items():
            terms[e] = ctx.add(terms.get(e, 0), c)
        return LaurentPoly.from_terms(ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        return LaurentPoly.from_codes(ctx, self.offset, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        if not self.coeffs or not o.coeffs:
            return LaurentPoly.from_codes(ctx, 0, [])
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(o.coeffs):
                if y:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
        return LaurentPoly.from_codes(ctx, self.offset + o.offset, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self.exponents()) != 1:
                raise InvalidInput("only monomials are invertible Laurent polynomials")
            (ex, c), = self.term_codes().items()
            return LaurentPoly.monomial(self.ctx, ex * e, FieldElement(self.ctx, self.ctx.power(c, e)))
        result = LaurentPoly.monomial(self.ctx, 0, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by t^m."""
        return LaurentPoly.from_codes(self.ctx, self.offset + m, self.coeffs)

    def scale(self, c) -> "LaurentPoly":
        code = self.ctx.code_of(c)
        return LaurentPoly.from_codes(self.ctx, self.offset, [self.ctx.mul(code, x) for x in self.coeffs])

    def derivative(self) -> "LaurentPoly":
        ctx = self.ctx
        terms = {}
        for e, c in self.term_codes().items():
            terms[e - 1] = ctx.mul(ctx.from_int(e), c)
        return LaurentPoly.from_terms(ctx, terms)

    def substitute_scaling(self, a) -> "LaurentPoly":
        """f(a*t) for a nonzero scalar a."""
        ctx = self.ctx
        ac = ctx.code_of(a)
        if ac == 0:
            raise InvalidAutomorphism("t -> a*t needs a != 0")
        return LaurentPoly.from_terms(ctx, {e: ctx.mul(c, ctx.power(ac, e))
                                            for e, c in self.term_codes().items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """f(1/t)."""
        return LaurentPoly.from_terms(self.ctx, {-e: c for e, c in self.term_codes().items()})

    def evaluate(self, x) -> FieldElement:
        ctx = self.ctx
        xc = ctx.code_of(x)
        if xc == 0 and self.coeffs and self.offset < 0:
            raise ZeroDivisionError("Laurent polynomial with a pole evaluated at 0")
        acc = 0
        for e, c in self.term_codes().items():
            acc = ctx.add(acc, ctx.mul(c, ctx.power(xc, e)))
        return FieldElement(ctx, acc)

    __call__ = evaluate

    def order_at_zero(self):
        """t-adic valuation; None for the zero Laurent polynomial."""
        return self.min_exponent()

    def map_coeffs(self, emb) -> "LaurentPoly":
        return LaurentPoly.from_codes(emb.dst, self.offset, [emb.code(c) for c in self.coeffs])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.offset == o.offset and self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.to_poly())
        return hash(("laurent", self.ctx, self.offset, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _fmt_terms(self.ctx, list(self.term_codes().items()))
