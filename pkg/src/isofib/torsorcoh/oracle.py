"""Exhaustive stabilizers over a finite field.

A difference f(a t + b) - f(t) lies in k[t^p] iff it equals h^p for some h;
over F_q the candidate h is obtained by taking p-th roots of coefficients and
is then raised to the p-th power and compared.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import ResourceLimit
from ..ffpoly.field import FieldCtx
from ..ffpoly.poly import LaurentPoly, compose_affine
from .classes import A1, A1_STAR, MU, P1, TorsorClass

MAP_CAP = 1 << 20


def is_pth_power(d) -> bool:
    ctx = d.ctx
    p = ctx.p
    if d.is_zero():
        return True
    terms = d.term_codes() if isinstance(d, LaurentPoly) else dict(
        (i, c) for i, c in enumerate(d.coeffs) if c)
    root = {e // p: ctx.pth_root_code(c) for e, c in terms.items() if e % p == 0}
    h = LaurentPoly.from_terms(ctx, root)
    return (h ** p) == (d if isinstance(d, LaurentPoly) else d.to_laurent())


@lru_cache(maxsize=4096)
def _expansion(F: FieldCtx, a: int, b: int, degree: int):
    """rows[e][j] = coefficient of t^j in (a t + b)^e, as codes."""
    rows = [[1]]
    for _ in range(degree):
        prev = rows[-1]
        nxt = [0] * (len(prev) + 1)
        for i, x in enumerate(prev):
            if x:
                nxt[i] = F.add(nxt[i], F.mul(x, b))
                nxt[i + 1] = F.add(nxt[i + 1], F.mul(x, a))
        rows.append(nxt)
    return rows


def _affine_fixes(f, a, b) -> bool:
    F = f.ctx
    ac, bc = a.code, b.code
    p = F.p
    coeffs = f.coeffs
    rows = _expansion(F, ac, bc, len(coeffs) - 1)
    add, mul = F.add, F.mul
    # coefficients at exponents prime to p must cancel
    for j in range(1, len(coeffs)):
        if j % p == 0:
            continue
        acc = F.neg(coeffs[j])
        for e in range(j, len(coeffs)):
            if coeffs[e]:
                acc = add(acc, mul(coeffs[e], rows[e][j]))
        if acc:
            return False
    return is_pth_power(compose_affine(f, a, b) - f)


def affine_maps(F: FieldCtx, star: bool):
    for a in F.nonzero():
        if star:
            yield a, F.zero()
        else:
            for b in F.elements():
                yield a, b


def brute_force_stabilizer(cls: TorsorClass, F: FieldCtx | None = None, cap: int = MAP_CAP):
    """All (a, b) over F with t -> a t + b fixing the class (b = 0 on A1*)."""
    F = F or cls.ctx
    c = cls.embed(F)
    kind = c.base.kind
    star = kind == A1_STAR
    n_maps = (F.q - 1) * (1 if star else F.q)
    if n_maps > cap:
        raise ResourceLimit(f"{n_maps} affine maps exceed the cap {cap}")
    out = []
    if kind == P1 or c.rep is None:
        return list(affine_maps(F, star))
    if c.group == MU:
        # t^i is fixed by t -> a t iff a^i is a p-th power in F
        pth_powers = {F.power(x, F.p) for x in range(F.q)}
        for a, b in affine_maps(F, True):
            if F.power(a.code, c.rep) in pth_powers:
                out.append((a, b))
        return out
    f = c.rep
    for a, b in affine_maps(F, star):
        if kind == A1:
            fixed = _affine_fixes(f, a, b)
        else:
            fixed = is_pth_power(f.substitute_scaling(a) - f)
        if fixed:
            out.append((a, b))
    return out


def stabilizer_size_table(classes, F=None):
    return {cls: len(brute_force_stabilizer(cls, F)) for cls in classes}
