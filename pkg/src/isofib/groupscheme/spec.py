"""Finite commutative group schemes over an algebraically closed field of
characteristic p, up to isomorphism, as multisets of atoms.

Atoms:
  * ``Etale(n)``        the constant group Z/n (stored split into prime powers)
  * ``Mu(p^k)``         the multiplicative group scheme mu_{p^k}
  * ``Alpha(p^k)``      the additive group scheme alpha_{p^k}
  * ``SSKernel(level)`` the kernel of Frobenius^level on a supersingular
    elliptic curve (level >= 2; level 2 is E[p], order p^2). It is local-local
    and neither additive nor multiplicative.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd

from ..errors import InvalidInput
from ..ffpoly.field import is_prime, prime_factors


@dataclass(frozen=True, order=True)
class Atom:
    kind: str  # "etale" | "mu" | "alpha" | "sskernel"
    order: int
    level: int = 0  # only for sskernel

    def label(self, p=None) -> str:
        if self.kind == "etale":
            return f"Z/{self.order}"
        if self.kind == "mu":
            return f"mu_{self.order}"
        if self.kind == "alpha":
            return f"alpha_{self.order}"
        return "sskernel" if self.level == 2 else f"sskernel^{self.level}"


def _log_p(n, p):
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise InvalidInput(f"{n * p ** k} is not a power of {p}")
    return k


def Etale(n: int) -> list[Atom]:
    if n < 1:
        raise InvalidInput("Z/n needs n >= 1")
    atoms = []
    for r in prime_factors(n):
        e = 1
        m = n
        while m % r == 0:
            m //= r
            e *= r
        atoms.append(Atom("etale", e))
    return atoms


def Mu(order: int) -> Atom:
    return Atom("mu", order)


def Alpha(order: int) -> Atom:
    return Atom("alpha", order)


def SSKernel(p: int, level: int = 2) -> Atom:
    if level < 2:
        raise InvalidInput("SSKernel level must be >= 2 (level 1 is alpha_p)")
    return Atom("sskernel", p ** level, level)


class GroupSchemeSpec:
    """An atom multiset with a fixed characteristic."""

    def __init__(self, p: int, atoms=()):
        if not is_prime(p):
            raise InvalidInput(f"{p} is not a prime characteristic")
        self.p = p
        flat = []
        for a in atoms:
            if isinstance(a, (list, tuple)):
                flat.extend(a)
            else:
                flat.append(a)
        for a in flat:
            self._check_atom(a)
        self.atoms = tuple(sorted(a for a in flat if a.order > 1))

    def _check_atom(self, a):
        p = self.p
        if a.kind in ("mu", "alpha", "sskernel"):
            if a.order > 1:
                _log_p(a.order, p)
        elif a.kind == "etale":
            if len(prime_factors(a.order)) > 1:
                raise InvalidInput("etale atoms must be cyclic of prime-power order")
        else:
            raise InvalidInput(f"unknown atom kind {a.kind!r}")

    @classmethod
    def trivial(cls, p):
        return cls(p, [])

    # -- structural queries ------------------------------------------------
    def order(self) -> int:
        n = 1
        for a in self.atoms:
            n *= a.order
        return n

    def is_trivial(self) -> bool:
        return not self.atoms

    def of_kind(self, kind) -> list[Atom]:
        return [a for a in self.atoms if a.kind == kind]

    def etale_part(self) -> "GroupSchemeSpec":
        return GroupSchemeSpec(self.p, self.of_kind("etale"))

    def infinitesimal_part(self) -> "GroupSchemeSpec":
        return GroupSchemeSpec(self.p, [a for a in self.atoms if a.kind != "etale"])

    def is_etale(self) -> bool:
        return all(a.kind == "etale" for a in self.atoms)

    def is_infinitesimal(self) -> bool:
        return all(a.kind != "etale" for a in self.atoms)

    def etale_is_cyclic(self) -> bool:
        primes = [prime_factors(a.order)[0] for a in self.of_kind("etale")]
        return len(primes) == len(set(primes))

    def is_cyclic_constant(self) -> bool:
        return self.is_etale() and self.etale_is_cyclic()

    def contains_alpha(self) -> bool:
        return bool(self.of_kind("alpha"))

    def contains_mu(self) -> bool:
        return bool(self.of_kind("mu"))

    def product(self, other: "GroupSchemeSpec") -> "GroupSchemeSpec":
        if other.p != self.p:
            raise InvalidInput("product of group schemes in different characteristics")
        return GroupSchemeSpec(self.p, list(self.atoms) + list(other.atoms))

    __mul__ = product

    def etale_p_rank_dims(self) -> list[int]:
        """Exponents of the p-primary cyclic etale factors."""
        return [_log_p(a.order, self.p) for a in self.of_kind("etale") if a.order % self.p == 0]

    def __eq__(self, other):
        return isinstance(other, GroupSchemeSpec) and self.p == other.p and self.atoms == other.atoms

    def __hash__(self):
        return hash((self.p, self.atoms))

    def __str__(self):
        if not self.atoms:
            return "e"
        counts = Counter(self.atoms)
        parts = []
        for a in sorted(counts, key=lambda a: (("etale", "mu", "alpha", "sskernel").index(a.kind), a.order)):
            n = counts[a]
            lab = a.label(self.p)
            parts.append(lab if n == 1 else f"({lab})^{n}")
        return " x ".join(parts)

    def __repr__(self):
        return f"GroupSchemeSpec(p={self.p}, {self})"

    def to_json(self):
        return {"p": self.p, "literal": str(self), "order": self.order(),
                "atoms": [{"kind": a.kind, "order": a.order, **({"level": a.level} if a.level else {})}
                          for a in self.atoms]}


# -- containment -----------------------------------------------------------

def _dominated(small: list[int], big: list[int]) -> bool:
    """Sorted-partition dominance of cyclic factor orders (prime powers of one prime)."""
    s = sorted(small, reverse=True)
    b = sorted(big, reverse=True)
    if len(s) > len(b):
        return False
    return all(x <= y and y % x == 0 for x, y in zip(s, b))


def is_subspec(a: GroupSchemeSpec, b: GroupSchemeSpec) -> bool:
    """Whether a is isomorphic to a subgroup scheme of b (atom-wise dominance).

    Etale, multiplicative and additive atoms embed kind-by-kind.  An
    SSKernel of level n contains exactly the Frobenius kernels of level < n,
    so it can absorb one alpha_p or one smaller SSKernel.
    """
    if a.p != b.p:
        return False
    by_prime_a: dict = {}
    by_prime_b: dict = {}
    for spec, table in ((a, by_prime_a), (b, by_prime_b)):
        for at in spec.of_kind("etale"):
            table.setdefault(prime_factors(at.order)[0], []).append(at.order)
    for r, orders in by_prime_a.items():
        if not _dominated(orders, by_prime_b.get(r, [])):
            return False
    if not _dominated([x.order for x in a.of_kind("mu")], [x.order for x in b.of_kind("mu")]):
        return False
    # each sskernel of b hosts one Frobenius kernel: alpha_p or a smaller sskernel
    slots = sorted(x.level for x in b.of_kind("sskernel"))
    for lvl in sorted((x.level for x in a.of_kind("sskernel")), reverse=True):
        fit = next((i for i, bl in enumerate(slots) if bl >= lvl), None)
        if fit is None:
            return False
        slots.pop(fit)
    a_alpha = sorted(x.order for x in a.of_kind("alpha"))
    parked = min(len(slots), a_alpha.count(a.p))
    a_alpha = a_alpha[parked:]
    return _dominated(a_alpha, [x.order for x in b.of_kind("alpha")])


# -- parsing ---------------------------------------------------------------

_ATOM_RE = re.compile(
    r"""^\s*(?:
        (?P<paren>\((?P<inner>[^()]+)\)\s*\^\s*(?P<pow>\d+)) |
        (?P<z>Z\s*/\s*(?P<zn>\d+)(?:\s*Z)?) |
        (?P<mu>mu_?\{?(?P<mun>\d+)\}?) |
        (?P<alpha>alpha_?\{?(?P<an>\d+)\}?) |
        (?P<ss>sskernel(?:\^(?P<sslvl>\d+))?) |
        (?P<triv>e|1|trivial)
    )\s*$""",
    re.VERBOSE | re.IGNORECASE,
)


def _infer_p(text):
    for m in re.finditer(r"(?:mu|alpha)_?\{?(\d+)\}?", text, re.IGNORECASE):
        n = int(m.group(1))
        f = prime_factors(n)
        if len(f) == 1:
            return f[0]
    return None


def _parse_atoms(text, p):
    text = text.strip()
    m = _ATOM_RE.match(text)
    if not m:
        raise InvalidInput(f"cannot parse group scheme factor {text!r}")
    if m.group("paren"):
        inner = parse_spec(m.group("inner"), p).atoms
        return list(inner) * int(m.group("pow"))
    if m.group("z"):
        return Etale(int(m.group("zn")))
    if m.group("mu"):
        n = int(m.group("mun"))
        _log_p(n, p)
        return [Mu(n)]
    if m.group("alpha"):
        n = int(m.group("an"))
        _log_p(n, p)
        return [Alpha(n)]
    if m.group("ss"):
        lvl = int(m.group("sslvl")) if m.group("sslvl") else 2
        return [SSKernel(p, lvl)]
    return []


def _split_factors(text):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "x×*":
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [s for s in (x.strip() for x in parts)]


def parse_spec(text: str, p: int | None = None) -> GroupSchemeSpec:
    """Parse literals such as ``"Z/4 x mu_3"``, ``"alpha_3"``, ``"(Z/2)^2"``,
    ``"sskernel"`` or ``"e"``."""
    if not isinstance(text, str):
        raise InvalidInput("group scheme literal must be a string")
    if p is None:
        p = _infer_p(text)
        if p is None:
            raise InvalidInput(f"cannot infer the characteristic from {text!r}; pass p")
    atoms = []
    for piece in _split_factors(text):
        if not piece:
            raise InvalidInput(f"empty factor in {text!r}")
        atoms.extend(_parse_atoms(piece, p))
    return GroupSchemeSpec(p, atoms)


def subspecs(spec: GroupSchemeSpec) -> list[GroupSchemeSpec]:
    """Every isomorphism class of subgroup scheme of ``spec``, as specs."""
    p = spec.p
    options_per_atom = []
    for a in spec.atoms:
        if a.kind == "etale":
            r = prime_factors(a.order)[0]
            opts = []
            e = 1
            while e <= a.order:
                opts.append([Atom("etale", e)] if e > 1 else [])
                e *= r
        elif a.kind in ("mu", "alpha"):
            opts = []
            e = 1
            while e <= a.order:
                opts.append([Atom(a.kind, e)] if e > 1 else [])
                e *= p
        else:
            opts = [[], [Alpha(p)]] + [[SSKernel(p, lv)] for lv in range(2, a.level + 1)]
        options_per_atom.append(opts)
    out = {GroupSchemeSpec(p, [])}
    for opts in options_per_atom:
        out = {GroupSchemeSpec(p, list(s.atoms) + o) for s in out for o in opts}
    return sorted(out, key=lambda s: (s.order(), str(s)))


def gcd_orders(*specs):
    g = 0
    for s in specs:
        g = gcd(g, s.order())
    return g
