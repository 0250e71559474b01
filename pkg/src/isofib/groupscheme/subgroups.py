from __future__ import annotations

from dataclasses import dataclass

from ..diagnostics import Diagnostics
from ..elliptic.automorphism import j_regime, legal_gamma_orders
from ..elliptic.curve import WeierstrassCurve
from ..elliptic.torsion import is_subgroup_of_curve
from ..errors import InvalidInput, UnsupportedSubgroup
from .spec import Alpha, Etale, GroupSchemeSpec, Mu, SSKernel, is_subspec, parse_spec

FIXED_LOCUS = "fixed-locus"
CYCLICITY = "cyclicity"
ILLEGAL_ORDER = "illegal-gamma-order"
NOT_A_SUBGROUP = "not-a-subgroup"


def embeds_in_Ga(spec: GroupSchemeSpec) -> bool:
    """Finite subgroup schemes of G_a are alpha_{p^n} x V with V an F_p-vector space."""
    p = spec.p
    alphas = spec.of_kind("alpha")
    if spec.of_kind("mu") or spec.of_kind("sskernel") or len(alphas) > 1:
        return False
    return all(a.order == p for a in spec.of_kind("etale"))


def embeds_in_Gm(spec: GroupSchemeSpec) -> bool:
    """Finite subgroup schemes of G_m are mu_{p^n} x Z/m with (m, p) = 1."""
    p = spec.p
    if spec.of_kind("alpha") or spec.of_kind("sskernel") or len(spec.of_kind("mu")) > 1:
        return False
    et = spec.of_kind("etale")
    return all(a.order % p for a in et) and spec.etale_is_cyclic()


def fixed_subgroup(curve: WeierstrassCurve, gamma_order: int) -> GroupSchemeSpec:
    """E^Gamma for the cyclic Gamma of the given order (unique up to Aut(E))."""
    p = curve.p
    regime = j_regime(curve)
    if gamma_order == 1:
        raise UnsupportedSubgroup("trivial Gamma fixes all of E, which is not a finite group scheme")
    if gamma_order not in legal_gamma_orders(p, regime):
        raise UnsupportedSubgroup(
            f"no cyclic subgroup of order {gamma_order} in Aut(E) for p={p}, regime {regime}")
    return fixed_subgroup_table(p, regime)[gamma_order]


def fixed_subgroup_table(p: int, regime: str) -> dict:
    two_torsion = GroupSchemeSpec(p, Etale(2) + Etale(2))
    e = GroupSchemeSpec(p, [])
    if regime == "generic":
        if p == 2:
            return {2: GroupSchemeSpec(p, [Mu(2)] + Etale(2))}
        return {2: two_torsion}
    if regime == "j1728":
        return {2: two_torsion, 4: GroupSchemeSpec(p, Etale(2))}
    if p == 3:
        return {2: two_torsion, 3: GroupSchemeSpec(p, [Alpha(3)]), 4: GroupSchemeSpec(p, Etale(2)), 6: e}
    if p == 2:
        return {2: GroupSchemeSpec(p, [SSKernel(2)]), 3: GroupSchemeSpec(p, Etale(3)),
                4: GroupSchemeSpec(p, [Alpha(2)]), 6: e}
    return {2: two_torsion, 3: GroupSchemeSpec(p, Etale(3)), 6: e}


def all_fixed_rows():
    """The fifteen (characteristic class, regime, |Gamma|, E^Gamma) rows for
    nontrivial Gamma. Each row carries a representative prime."""
    classes = (
        ("p!=2", 5, "generic"),
        ("p=2", 2, "generic"),
        ("p>=5", 5, "j1728"),
        ("p>=5", 7, "j0"),
        ("p=3", 3, "j0"),
        ("p=2", 2, "j0"),
    )
    rows = []
    for label, p, regime in classes:
        for order, spec in fixed_subgroup_table(p, regime).items():
            rows.append((label, p, regime, order, spec))
    return rows


@dataclass
class ElementarySubgroup:
    """Lambda_t x Gamma with Lambda_t a subgroup scheme of E and Gamma a
    cyclic group of automorphisms fixing O."""

    curve: WeierstrassCurve
    translation_part: GroupSchemeSpec
    graded_part: GroupSchemeSpec

    def __init__(self, curve, translation_part, graded_part):
        p = curve.p
        self.curve = curve
        if isinstance(translation_part, str):
            translation_part = parse_spec(translation_part, p)
        if isinstance(graded_part, int):
            if graded_part < 1:
                raise InvalidInput("Gamma order must be >= 1")
            graded_part = GroupSchemeSpec(p, Etale(graded_part))
        elif isinstance(graded_part, str):
            graded_part = parse_spec(graded_part, p)
        if translation_part.p != p or graded_part.p != p:
            raise InvalidInput("group schemes and curve differ in characteristic")
        self.translation_part = translation_part
        self.graded_part = graded_part

    @property
    def graded_part_order(self) -> int:
        return self.graded_part.order()

    def as_spec(self) -> GroupSchemeSpec:
        return self.translation_part.product(self.graded_part)

    def to_json(self):
        return {
            "curve": self.curve.to_text(),
            "translation_part": str(self.translation_part),
            "graded_part": str(self.graded_part),
            "graded_part_order": self.graded_part_order,
        }


def validate_elementary(sub: ElementarySubgroup) -> Diagnostics:
    diag = Diagnostics()
    E = sub.curve
    gamma = sub.graded_part
    n = gamma.order()
    regime = j_regime(E)
    if not diag.add("gamma-is-etale", gamma.is_etale(),
                    "" if gamma.is_etale() else f"Gamma = {gamma} is not a constant group", CYCLICITY):
        return diag
    cyclic = gamma.etale_is_cyclic()
    if not diag.add("gamma-cyclic", cyclic,
                    "" if cyclic else f"Gamma = {gamma} is not cyclic; abelian subgroups here are cyclic",
                    CYCLICITY):
        return diag
    legal = n in legal_gamma_orders(E.p, regime)
    if not diag.add("gamma-order-legal", legal,
                    "" if legal else f"Aut(E) has no cyclic subgroup of order {n} (p={E.p}, {regime})",
                    ILLEGAL_ORDER):
        return diag
    lam = sub.translation_part
    in_curve = is_subgroup_of_curve(lam, E)
    kind = "supersingular" if E.is_supersingular() else "ordinary"
    if not diag.add("translation-in-curve", in_curve,
                    "" if in_curve else f"{lam} is not a subgroup scheme of the {kind} curve",
                    NOT_A_SUBGROUP):
        return diag
    if n > 1:
        fixed = fixed_subgroup(E, n)
        inside = is_subspec(lam, fixed)
        diag.add("translation-fixed-by-gamma", inside,
                 "" if inside else f"{lam} is not contained in E^Gamma = {fixed} for |Gamma| = {n}",
                 FIXED_LOCUS)
    else:
        diag.add("translation-fixed-by-gamma", True, "Gamma trivial")
    return diag


def free_on_E(sub: ElementarySubgroup) -> bool:
    """Lambda_t x Gamma acts freely on E iff Gamma is trivial (a nontrivial
    automorphism fixing O has O as a fixed point)."""
    return sub.graded_part.is_trivial()
