"""Construction data (F, base, group) of an isotrivial fibration, as consumed
by the classifier. Geometric claims (that F carries the declared action, its
quotient genus) are trusted inputs; only arithmetic consistency is checked."""

from __future__ import annotations

from dataclasses import dataclass

from ..elliptic.curve import WeierstrassCurve, parse_curve
from ..errors import InvalidInput
from ..groupscheme.spec import GroupSchemeSpec, parse_spec

ELLIPTIC_BASE = "elliptic"
P1_TRIVIAL = "P1-trivial"
P1_FROM_A1 = "P1-from-A1"
P1_FROM_A1_STAR = "P1-from-A1*"
OTHER_BASE = "other"
BASE_KINDS = (ELLIPTIC_BASE, P1_TRIVIAL, P1_FROM_A1, P1_FROM_A1_STAR, OTHER_BASE)

_BASE_ALIASES = {
    "elliptic": ELLIPTIC_BASE, "elliptic-quotient": ELLIPTIC_BASE,
    "p1-trivial": P1_TRIVIAL, "projline-trivial": P1_TRIVIAL, "p1": P1_TRIVIAL,
    "p1-from-a1": P1_FROM_A1, "projline-from-a1": P1_FROM_A1,
    "p1-from-a1*": P1_FROM_A1_STAR, "p1-from-a1star": P1_FROM_A1_STAR,
    "projline-from-a1star": P1_FROM_A1_STAR, "projline-from-a1*": P1_FROM_A1_STAR,
    "other": OTHER_BASE, "curve": OTHER_BASE,
}

TRANSLATION, ADDITIVE, MULTIPLICATIVE, GROUP_AUT, TRIVIAL_ACTION = (
    "translation", "additive", "multiplicative", "group-automorphism", "trivial")
ACTION_KINDS = (TRANSLATION, ADDITIVE, MULTIPLICATIVE, GROUP_AUT, TRIVIAL_ACTION)


def normalize_base_kind(kind: str) -> str:
    key = str(kind).strip().lower()
    if key not in _BASE_ALIASES:
        raise InvalidInput(f"unknown base kind {kind!r}; expected one of {BASE_KINDS}")
    return _BASE_ALIASES[key]


@dataclass
class HighGenusFibre:
    genus: int
    quotient_genus: int
    action_free: bool

    def to_json(self):
        return {"genus": self.genus, "quotient_genus": self.quotient_genus, "action_free": self.action_free}


@dataclass
class EllipticFibre:
    curve: WeierstrassCurve

    def to_json(self):
        return {"curve": self.curve.to_text()}


@dataclass
class FibrationDatum:
    fibre_genus: int
    base_kind: str
    fibre: object  # HighGenusFibre | EllipticFibre
    p: int
    action_kind: str
    # genus one: Lambda_t and Gamma; higher genus: the group acting on F
    translation_part: GroupSchemeSpec | None = None
    graded_part: GroupSchemeSpec | None = None
    group: GroupSchemeSpec | None = None
    base_genus: int | None = None
    citation: str = ""

    @property
    def resolved_base_genus(self) -> int:
        if self.base_genus is not None:
            return self.base_genus
        return 1 if self.base_kind == ELLIPTIC_BASE else 0

    @property
    def curve(self) -> WeierstrassCurve | None:
        return self.fibre.curve if isinstance(self.fibre, EllipticFibre) else None

    def to_json(self):
        out = {"schema": 1, "fibre_genus": self.fibre_genus, "base_kind": self.base_kind, "p": self.p,
               "action_kind": self.action_kind, "fibre": self.fibre.to_json()}
        if self.base_genus is not None:
            out["base_genus"] = self.base_genus
        if self.group is not None:
            out["group"] = str(self.group)
        if self.translation_part is not None or self.graded_part is not None:
            out["translation_part"] = str(self.translation_part or GroupSchemeSpec(self.p, []))
            out["graded_part"] = str(self.graded_part or GroupSchemeSpec(self.p, []))
        if self.citation:
            out["citation"] = self.citation
        return out

    @classmethod
    def from_json(cls, obj) -> "FibrationDatum":
        if not isinstance(obj, dict):
            raise InvalidInput("datum must be an object")
        if "datum" in obj and isinstance(obj["datum"], dict):
            obj = obj["datum"]
        try:
            genus = int(obj["fibre_genus"])
            base = normalize_base_kind(obj["base_kind"])
            fibre_obj = obj["fibre"]
            action = str(obj.get("action_kind", TRIVIAL_ACTION)).strip().lower()
        except KeyError as exc:
            raise InvalidInput(f"datum is missing {exc.args[0]!r}") from None
        if action not in ACTION_KINDS:
            raise InvalidInput(f"unknown action kind {action!r}; expected one of {ACTION_KINDS}")
        if genus < 1:
            raise InvalidInput("fibre genus must be >= 1")
        base_genus = obj.get("base_genus")
        base_genus = None if base_genus is None else int(base_genus)
        if genus == 1:
            if not isinstance(fibre_obj, dict) or "curve" not in fibre_obj:
                raise InvalidInput("genus-one data need fibre.curve")
            curve = fibre_obj["curve"]
            curve = curve if isinstance(curve, WeierstrassCurve) else parse_curve(str(curve))
            p = curve.p
            if "p" in obj and int(obj["p"]) != p:
                raise InvalidInput(f"datum p = {obj['p']} disagrees with the curve (p = {p})")
            lam = _spec(obj.get("translation_part", "e"), p)
            gam = obj.get("graded_part", 1)
            gam = parse_spec(f"Z/{gam}", p) if isinstance(gam, int) else _spec(gam, p)
            return cls(genus, base, EllipticFibre(curve), p, action, lam, gam, None, base_genus,
                       str(obj.get("citation", "")))
        if "p" not in obj:
            raise InvalidInput("higher-genus data need the characteristic p")
        p = int(obj["p"])
        if not isinstance(fibre_obj, dict):
            raise InvalidInput("fibre must be an object")
        try:
            fib = HighGenusFibre(int(fibre_obj.get("genus", genus)), int(fibre_obj["quotient_genus"]),
                                 bool(fibre_obj["action_free"]))
        except KeyError as exc:
            raise InvalidInput(f"fibre is missing {exc.args[0]!r}") from None
        if fib.genus != genus:
            raise InvalidInput("fibre.genus disagrees with fibre_genus")
        group = _spec(obj.get("group", "e"), p)
        return cls(genus, base, fib, p, action, None, None, group, base_genus,
                   str(obj.get("citation", "")))


def _spec(value, p):
    if isinstance(value, GroupSchemeSpec):
        return value
    return parse_spec(str(value), p)
