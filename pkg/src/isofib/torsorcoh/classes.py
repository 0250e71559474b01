"""H^1 of mu_p and alpha_p over the rational bases P^1, A^1, A^1 minus a point,
and the action of affine reparametrizations on those classes.

Over k[t] the alpha_p classes are k[t]/k[t^p]; over k[t, 1/t] they are
k[t, 1/t]/k[t^{+-p}]; the mu_p classes over A^1* are t^i for 0 <= i < p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import InvalidAutomorphism, InvalidInput, UnsupportedSubgroup
from ..ffpoly.field import FieldCtx, embedding, field
from ..ffpoly.parse import parse_laurent
from ..ffpoly.poly import LaurentPoly, Poly, canonical_mod_pth, compose_affine

ELLIPTIC, P1, A1, A1_STAR = "elliptic", "P1", "A1", "A1*"
BASE_KINDS = (ELLIPTIC, P1, A1, A1_STAR)
ALPHA, MU = "alpha_p", "mu_p"
GROUPS = (ALPHA, MU)

_BASE_ALIASES = {
    "elliptic": ELLIPTIC, "e": ELLIPTIC,
    "p1": P1, "projline": P1, "p^1": P1,
    "a1": A1, "affline": A1, "a^1": A1,
    "a1*": A1_STAR, "afflinestar": A1_STAR, "gm": A1_STAR, "a^1*": A1_STAR,
}


def normalize_base(kind: str) -> str:
    key = str(kind).strip().lower().replace(" ", "")
    if key not in _BASE_ALIASES:
        raise InvalidInput(f"unknown base curve {kind!r}; expected one of {BASE_KINDS}")
    return _BASE_ALIASES[key]


def normalize_group(group: str) -> str:
    key = str(group).strip().lower()
    if key in ("alpha_p", "alpha", "a_p"):
        return ALPHA
    if key in ("mu_p", "mu", "m_p"):
        return MU
    raise InvalidInput(f"unknown group {group!r}; expected alpha_p or mu_p")


@dataclass(frozen=True)
class BaseCurve:
    kind: str
    curve: object = None

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_base(self.kind))


class TorsorClass:
    """A flat cohomology class in H^1(base, G) for G in {alpha_p, mu_p}.

    ``rep`` is canonicalized on construction: monomials with exponent
    divisible by p are dropped for alpha_p, the exponent is reduced mod p for
    mu_p, and classes with trivial cohomology carry ``rep = None``.
    """

    def __init__(self, base, group, ctx: FieldCtx, rep=None):
        self.base = base if isinstance(base, BaseCurve) else BaseCurve(base)
        self.group = normalize_group(group)
        self.ctx = ctx
        kind = self.base.kind
        if kind == ELLIPTIC:
            raise UnsupportedSubgroup("classes over an elliptic base are only described, not enumerated")
        if kind == P1 or (kind == A1 and self.group == MU):
            if rep not in (None, 0) and not _is_zero_rep(rep):
                raise InvalidInput(f"H^1({kind}, {self.group}) = 0; only the zero class exists")
            self.rep = None
            return
        if self.group == MU:
            if isinstance(rep, (Poly, LaurentPoly)):
                exps = rep.exponents()
                if len(exps) > 1 or (exps and rep.terms()[0][1] != 1):
                    raise InvalidInput("mu_p classes on A1* are monomials t^i")
                rep = exps[0] if exps else 0
            if rep is None:
                rep = 0
            if not isinstance(rep, int):
                raise InvalidInput("mu_p class representative must be an exponent")
            self.rep = rep % ctx.p
            return
        if rep is None:
            rep = Poly(ctx, []) if kind == A1 else LaurentPoly(ctx, 0, [])
        if kind == A1:
            if isinstance(rep, LaurentPoly):
                if not rep.is_polynomial():
                    raise InvalidInput("alpha_p classes on A1 are polynomials in t")
                rep = rep.to_poly()
            if not isinstance(rep, Poly):
                raise InvalidInput("alpha_p class representative must be a polynomial")
        else:
            if isinstance(rep, Poly):
                rep = rep.to_laurent()
            if not isinstance(rep, LaurentPoly):
                raise InvalidInput("alpha_p class representative must be a Laurent polynomial")
        if rep.ctx != ctx:
            raise InvalidInput("representative lives over a different field")
        self.rep = canonical_mod_pth(rep)

    @property
    def p(self):
        return self.ctx.p

    def is_zero(self) -> bool:
        if self.rep is None:
            return True
        if isinstance(self.rep, int):
            return self.rep == 0
        return self.rep.is_zero()

    def key(self):
        r = self.rep
        if r is None or isinstance(r, int):
            return (self.base.kind, self.group, r)
        return (self.base.kind, self.group, tuple(sorted(r.term_codes().items()))
                if isinstance(r, LaurentPoly) else r.coeffs)

    def __eq__(self, other):
        return isinstance(other, TorsorClass) and self.ctx == other.ctx and self.key() == other.key()

    def __hash__(self):
        return hash((self.ctx, self.key()))

    def rep_text(self) -> str:
        if self.rep is None:
            return "0"
        if isinstance(self.rep, int):
            return "1" if self.rep == 0 else ("t" if self.rep == 1 else f"t^{self.rep}")
        return str(self.rep)

    def __repr__(self):
        return f"TorsorClass({self.base.kind}, {self.group}, [{self.rep_text()}] over F_{self.ctx.q})"

    def to_json(self):
        out = {"base": self.base.kind, "group": self.group, "p": self.ctx.p, "rep": self.rep_text()}
        if self.ctx.k > 1:
            out["k"] = self.ctx.k
            out["modulus"] = list(self.ctx.modulus)
        return out

    @classmethod
    def from_json(cls, obj) -> "TorsorClass":
        if not isinstance(obj, dict):
            raise InvalidInput("torsor class must be a JSON object")
        for key in ("base", "group", "p"):
            if key not in obj:
                raise InvalidInput(f"torsor class is missing {key!r}")
        k = int(obj.get("k", 1))
        ctx = field(int(obj["p"]), k) if "modulus" not in obj else FieldCtx(int(obj["p"]), k, obj["modulus"])
        return parse_class(obj["base"], obj["group"], ctx, obj.get("rep", "0"))

    def embed(self, target: FieldCtx) -> "TorsorClass":
        if target == self.ctx:
            return self
        emb = embedding(self.ctx, target)
        rep = self.rep
        if isinstance(rep, (Poly, LaurentPoly)):
            rep = rep.map_coeffs(emb)
        return TorsorClass(self.base, self.group, target, rep)


def _is_zero_rep(rep):
    if isinstance(rep, (Poly, LaurentPoly)):
        return rep.is_zero()
    return rep == "0"


def parse_class(base, group, ctx: FieldCtx, rep) -> TorsorClass:
    base = normalize_base(base)
    group = normalize_group(group)
    if isinstance(rep, str):
        lp = parse_laurent(rep, ctx)
        if base == A1 and group == ALPHA:
            if not lp.is_polynomial():
                raise InvalidInput("alpha_p classes on A1 cannot have negative exponents")
            return TorsorClass(base, group, ctx, lp.to_poly())
        if group == MU and base == A1_STAR:
            return TorsorClass(base, group, ctx, lp)
        if lp.is_zero():
            return TorsorClass(base, group, ctx, None)
        return TorsorClass(base, group, ctx, lp)
    return TorsorClass(base, group, ctx, rep)


# -- descriptions of H^1 ---------------------------------------------------------

@dataclass
class H1Descriptor:
    base: str
    group: str
    p: int
    kind: str  # "zero" | "finite" | "quotient" | "descriptive"
    summary: str
    size: int | None = None

    def basis_exponent_ok(self, e: int) -> bool:
        if self.kind != "quotient":
            return False
        if e % self.p == 0:
            return False
        return e >= 1 if self.base == A1 else True

    def monomials(self, max_degree: int, min_degree: int | None = None) -> list[int]:
        """Exponents of the monomial basis within the given window."""
        if self.kind != "quotient":
            return []
        lo = 1 if self.base == A1 else (-max_degree if min_degree is None else min_degree)
        return [e for e in range(lo, max_degree + 1) if self.basis_exponent_ok(e)]

    def to_json(self):
        out = {"base": self.base, "group": self.group, "p": self.p, "kind": self.kind,
               "summary": self.summary}
        if self.size is not None:
            out["size"] = self.size
        return out


def h1_description(base, group, p: int) -> H1Descriptor:
    base = normalize_base(base if not isinstance(base, BaseCurve) else base.kind)
    group = normalize_group(group)
    if base == ELLIPTIC:
        return H1Descriptor(base, group, p, "descriptive",
                            "torsors over an elliptic base reduce to degree 1 or degree p")
    if base == P1:
        return H1Descriptor(base, group, p, "zero", "H^1 = 0", 1)
    if base == A1 and group == MU:
        return H1Descriptor(base, group, p, "zero", "H^1 = 0 (units of k[t] are constants)", 1)
    if base == A1_STAR and group == MU:
        return H1Descriptor(base, group, p, "finite", "{1, t, ..., t^(p-1)}, i.e. Z/p", p)
    if base == A1:
        return H1Descriptor(base, group, p, "quotient", "k[t]/k[t^p], basis t^i with p not dividing i")
    return H1Descriptor(base, group, p, "quotient",
                        "k[t,1/t]/k[t^p,1/t^p], basis t^i (i in Z) with p not dividing i")


def enumerate_classes(base, group, ctx: FieldCtx, max_degree: int = 0, min_degree: int | None = None):
    """Every class with canonical support in the exponent window, over ctx."""
    desc = h1_description(base, group, ctx.p)
    if desc.kind == "zero":
        yield TorsorClass(desc.base, desc.group, ctx, None)
        return
    if desc.kind == "finite":
        for i in range(ctx.p):
            yield TorsorClass(desc.base, desc.group, ctx, i)
        return
    if desc.kind == "descriptive":
        raise UnsupportedSubgroup("classes over an elliptic base cannot be enumerated")
    exps = desc.monomials(max_degree, min_degree)
    for codes in itertools.product(range(ctx.q), repeat=len(exps)):
        terms = dict(zip(exps, codes))
        rep = LaurentPoly.from_terms(ctx, terms)
        if desc.base == A1:
            rep = rep.to_poly()
        yield TorsorClass(desc.base, desc.group, ctx, rep)


# -- action of reparametrizations ------------------------------------------------

def act_on_class(cls: TorsorClass, a, b=0) -> TorsorClass:
    """Pull back along t -> a t + b (A1) or t -> a t (A1*)."""
    ctx = cls.ctx
    ac, bc = ctx.code_of(a), ctx.code_of(b)
    if ac == 0:
        raise InvalidAutomorphism("a must be nonzero")
    kind = cls.base.kind
    if kind == A1_STAR and bc != 0:
        raise InvalidAutomorphism("automorphisms of A1* fixing 0 and infinity are t -> a t")
    if cls.rep is None or cls.group == MU:
        # mu_p classes t^i are fixed: a^i is a p-th power over a perfect field
        return cls
    if kind == A1:
        return TorsorClass(cls.base, cls.group, ctx,
                           compose_affine(cls.rep, ctx.from_code(ac), ctx.from_code(bc)))
    return TorsorClass(cls.base, cls.group, ctx, cls.rep.substitute_scaling(ctx.from_code(ac)))


def act_flip(cls: TorsorClass) -> TorsorClass:
    """Pull back along t -> 1/t on A1* (not part of the stabilizer predicates)."""
    if cls.base.kind != A1_STAR:
        raise InvalidAutomorphism("t -> 1/t is only an automorphism of A1*")
    if cls.group == MU:
        return TorsorClass(cls.base, cls.group, cls.ctx, (-cls.rep) % cls.p)
    return TorsorClass(cls.base, cls.group, cls.ctx, cls.rep.substitute_inverse())


@dataclass
class StabilizerVerdict:
    infinite: bool
    description: str

    def to_json(self):
        return {"infinite": self.infinite, "description": self.description}


def stabilizer_is_infinite(cls: TorsorClass) -> StabilizerVerdict:
    kind = cls.base.kind
    if kind == P1:
        return StabilizerVerdict(True, "H^1 = 0: every automorphism of P1 fixes the class")
    if cls.group == MU:
        if kind == A1:
            return StabilizerVerdict(True, "H^1 = 0: every affine map fixes the class")
        return StabilizerVerdict(True, "all scalings t -> a t fix t^i")
    if cls.is_zero():
        full = "all maps t -> a t + b" if kind == A1 else "all scalings t -> a t"
        return StabilizerVerdict(True, f"zero class: {full}")
    if kind == A1:
        if cls.rep.exponents() == [1]:
            return StabilizerVerdict(True, "class of c*t: exactly the translations t -> t + b")
        return StabilizerVerdict(False, "finite: a must satisfy a^i = 1 on the support and b is pinned down")
    return StabilizerVerdict(False, "finite: a^i = 1 for every exponent i in the support")
