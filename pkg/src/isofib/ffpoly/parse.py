"""Text syntax for polynomials: ``"t^2 + 2t^-1"``, ``"(a+1)t^3 - t"``.

Coefficients are integers (read in the prime subfield) or a parenthesised
polynomial in the field generator ``a``.
"""

from __future__ import annotations

import re

from ..errors import InvalidInput
from .field import FieldCtx
from .poly import LaurentPoly, Poly

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+|\([^()]*\))?\s*\*?\s*
        (?:(?P<var>[a-z])(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def _parse_monomial_sum(text, var, coef_parser, ctx):
    terms: dict[int, int] = {}
    pos = 0
    text = text.strip()
    if not text:
        raise InvalidInput("empty polynomial")
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidInput(f"cannot parse {text!r} near position {pos}")
        if not first and m.group("sign") is None:
            raise InvalidInput(f"missing operator in {text!r} near position {pos}")
        first = False
        if m.group("coef") is None and m.group("var") is None:
            raise InvalidInput(f"dangling sign in {text!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise InvalidInput(f"unexpected variable {m.group('var')!r}, expected {var!r}")
        coef = coef_parser(m.group("coef")) if m.group("coef") else 1
        code = ctx.code_of(coef)
        if m.group("sign") == "-":
            code = ctx.neg(code)
        if m.group("var") is None:
            exp = 0
        else:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        terms[exp] = ctx.add(terms.get(exp, 0), code)
        pos = m.end()
    return terms


def parse_field_element(text: str, ctx: FieldCtx):
    """Parse ``"3"``, ``"a+1"`` or ``"(2a^2+1)"`` into a field element."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    terms = _parse_monomial_sum(text, "a", int, _PrimeShim(ctx))
    acc = ctx.zero()
    g = ctx.gen()
    for e, c in terms.items():
        if e < 0:
            raise InvalidInput("negative power of the generator")
        if e > 0 and ctx.k == 1:
            raise InvalidInput("the generator 'a' only exists in extension fields")
        acc = acc + ctx.from_code(c) * (g ** e)
    return acc


class _PrimeShim:
    """Lets the monomial parser accumulate prime-field digits."""

    def __init__(self, ctx):
        self._ctx = ctx

    def code_of(self, v):
        return v % self._ctx.p

    def from_int(self, v):
        return v % self._ctx.p

    def add(self, a, b):
        return (a + b) % self._ctx.p

    def neg(self, a):
        return (-a) % self._ctx.p


def parse_laurent(text: str, ctx: FieldCtx, var: str = "t") -> LaurentPoly:
    terms = _parse_monomial_sum(text, var, lambda s: _coef(s, ctx), ctx)
    return LaurentPoly.from_terms(ctx, terms)


def parse_poly(text: str, ctx: FieldCtx, var: str = "t") -> Poly:
    lp = parse_laurent(text, ctx, var)
    if not lp.is_polynomial():
        raise InvalidInput(f"{text!r} has negative exponents; expected a polynomial")
    return lp.to_poly()


def _coef(s, ctx):
    if s.startswith("("):
        return parse_field_element(s, ctx)
    return int(s)
