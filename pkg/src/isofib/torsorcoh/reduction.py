from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from ..errors import ClassificationRejected, InvalidInput
from ..diagnostics import Diagnostics
from ..groupscheme.spec import GroupSchemeSpec, parse_spec
from .classes import A1, ALPHA, ELLIPTIC, P1, TorsorClass, normalize_base, stabilizer_is_infinite


@dataclass
class ReductionResult:
    applicable: bool
    subgroup: GroupSchemeSpec | None
    reduced: TorsorClass | None
    smooth: bool | None
    note: str

    def to_json(self):
        return {
            "applicable": self.applicable,
            "subgroup": None if self.subgroup is None else str(self.subgroup),
            "reduced_class": None if self.reduced is None else self.reduced.to_json(),
            "smooth": self.smooth,
            "note": self.note,
        }


def _rank_one_spec(cls: TorsorClass) -> GroupSchemeSpec:
    return parse_spec(("alpha_" if cls.group == ALPHA else "mu_") + str(cls.p), cls.p)


def reduce_rank_one(cls: TorsorClass) -> ReductionResult:
    """Nori reduction for a torsor under mu_p or alpha_p."""
    if cls.is_zero():
        return ReductionResult(True, GroupSchemeSpec(cls.p, []), cls, True,
                               "trivial torsor reduces to the identity subgroup")
    verdict = stabilizer_is_infinite(cls)
    if verdict.infinite:
        return ReductionResult(True, _rank_one_spec(cls), cls, True,
                               "no proper subgroup of a rank-p group; the total space is smooth")
    return ReductionResult(False, None, None, None,
                           f"stabilizer is finite ({verdict.description}); outside the reduction hypothesis")


def multisection_torsion_bound(degrees) -> int:
    """An n with n * [X] = 0: the gcd of the multisection degrees."""
    degrees = list(degrees)
    if not degrees:
        raise InvalidInput("need at least one multisection degree")
    for d in degrees:
        if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
            raise InvalidInput(f"multisection degree {d!r} is not a positive integer")
    return reduce(gcd, degrees)


def component_reduction(perms: dict, base_component: int = 0):
    """Reduce an etale torsor with disconnected total space to one component.

    ``perms`` maps each group element to the permutation (tuple) it induces
    on components. Returns (orbit, stabilizer elements); the orbit must be
    all components since G acts transitively on them.
    """
    if not perms:
        raise InvalidInput("empty group")
    n = len(next(iter(perms.values())))
    if any(len(p) != n for p in perms.values()):
        raise InvalidInput("permutations act on different component sets")
    orbit = sorted({p[base_component] for p in perms.values()})
    if len(orbit) != n:
        raise InvalidInput("group does not act transitively on the components")
    stab = [g for g, p in perms.items() if p[base_component] == base_component]
    if len(stab) * n != len(perms):
        raise InvalidInput("orbit-stabilizer count fails; input is not a group action")
    return orbit, stab


# -- pairs (T, G) with infinite Bir(T)^G -----------------------------------------

PAIR_QUOTIENT = {"A": "elliptic", "B": "P1", "C": "A1", "D": "A1*"}


@dataclass
class PairCase:
    label: str
    quotient: str
    diagnostics: Diagnostics

    def to_json(self):
        return {"case": self.label, "quotient": self.quotient, "diagnostics": self.diagnostics.to_json()}


def torsor_pair_classify(curve_kind, group: GroupSchemeSpec, curve=None) -> PairCase:
    from ..elliptic.torsion import embeds_in_some_elliptic_curve, is_subgroup_of_curve
    from ..groupscheme.subgroups import embeds_in_Ga, embeds_in_Gm

    kind = normalize_base(curve_kind)
    diag = Diagnostics()
    if kind == ELLIPTIC:
        ok = is_subgroup_of_curve(group, curve) if curve is not None else embeds_in_some_elliptic_curve(group)
        target = "the given curve" if curve is not None else "any elliptic curve"
        diag.add("G-subgroup-of-E", ok, "" if ok else f"{group} is not a subgroup scheme of {target}",
                 "not-a-subgroup")
        label = "A"
    elif kind == P1:
        ok = group.is_trivial()
        diag.add("G-trivial", ok, "" if ok else f"G = {group} must be trivial over P1", "nontrivial-group")
        label = "B"
    elif kind == A1:
        ok = embeds_in_Ga(group)
        diag.add("G-embeds-in-Ga", ok, "" if ok else f"{group} does not embed in G_a", "not-in-Ga")
        label = "C"
    else:
        ok = embeds_in_Gm(group)
        diag.add("G-embeds-in-Gm", ok, "" if ok else f"{group} does not embed in G_m", "not-in-Gm")
        label = "D"
    if not diag.ok:
        raise ClassificationRejected(diag.first_violation.message, diag)
    return PairCase(label, PAIR_QUOTIENT[label], diag)


ELLIPTIC_DEGREES = "1 or p"


def elliptic_degree_verdict(degree: int, p: int) -> str:
    """deg(X_red -> E) is 1 (X_red is a section) or p (X reduced)."""
    if degree == 1:
        return "reduced-to-section"
    if degree == p:
        return "reduced-total-space"
    raise InvalidInput(f"degree of X_red over E must be 1 or {p}, got {degree}")

