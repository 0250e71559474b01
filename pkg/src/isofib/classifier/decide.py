from __future__ import annotations

from dataclasses import dataclass, field

from ..diagnostics import Diagnostics
from ..elliptic.automorphism import j_regime
from ..elliptic.torsion import embeds_in_some_elliptic_curve
from ..errors import ClassificationRejected, InvalidInput
from ..groupscheme.spec import GroupSchemeSpec, parse_spec
from ..groupscheme.subgroups import ElementarySubgroup, embeds_in_Ga, embeds_in_Gm, validate_elementary
from .datum import (ADDITIVE, ELLIPTIC_BASE, GROUP_AUT, MULTIPLICATIVE, OTHER_BASE, P1_FROM_A1,
                    P1_FROM_A1_STAR, P1_TRIVIAL, TRANSLATION, FibrationDatum)
from .kodaira import I0, I0_STAR, II, II_STAR, III, III_STAR, IV, IV_STAR, NEG_INF, SingularFibre

HIGH_GENUS_CASES = ("A", "B", "C", "D")
GENUS_ONE_CASES = ("A-i", "A-ii", "B", "C-i", "C-ii", "D-i", "D-ii")

# fibre pairs over 0 and infinity for Gamma = mu_n acting on E x P^1
D_II_FIBRES = {2: (I0_STAR, I0_STAR), 3: (IV, IV_STAR), 4: (III, III_STAR), 6: (II, II_STAR)}

_ACTIONS_FOR_BASE = {
    ELLIPTIC_BASE: (TRANSLATION, GROUP_AUT),
    P1_FROM_A1: (ADDITIVE,),
    P1_FROM_A1_STAR: (MULTIPLICATIVE,),
}


@dataclass
class ClassificationResult:
    case_label: str
    base_genus: int
    singular_fibres: list
    kappa: object
    q: object
    minimal: bool | None
    citation: str
    datum: FibrationDatum
    notes: list = field(default_factory=list)
    diagnostics: Diagnostics | None = None

    def to_json(self):
        out = {
            "schema": 1,
            "case": self.case_label,
            "citation": self.citation,
            "base_genus": self.base_genus,
            "singular_fibres": [f.to_json() for f in self.singular_fibres],
            "kappa": self.kappa,
            "q": self.q,
            "minimal": self.minimal,
            "notes": list(self.notes),
            "datum": self.datum.to_json(),
        }
        if self.diagnostics is not None:
            out["diagnostics"] = self.diagnostics.to_json()
        return out


def citation_for(label: str, genus: int) -> str:
    family = "genus-one classification" if genus == 1 else "higher-genus classification"
    return f"{family}: case {label}"


def kappa_from_base(base_genus: int):
    if base_genus == 1:
        return 0
    if base_genus == 0:
        return NEG_INF
    raise InvalidInput(f"base genus {base_genus}: an infinite birational automorphism group "
                       "of the base forces genus 0 or 1")


def relative_aut_verdict(fibre_genus: int, jacobian: str) -> str:
    """Size of B(X/C) from the Mordell-Weil side: genus >= 2 is always finite."""
    if not isinstance(fibre_genus, int) or fibre_genus < 1:
        raise InvalidInput("fibre genus must be >= 1")
    jac = str(jacobian).strip().lower().replace("_", "-")
    if jac not in ("trivial", "infinitely-many-sections", "finitely-many-sections"):
        raise InvalidInput(f"unknown Jacobian descriptor {jacobian!r}")
    if fibre_genus >= 2:
        return "finite"
    if jac == "trivial":
        return "infinitely_generated"
    if jac == "infinitely-many-sections":
        return "infinite"
    return "finite"


# -- validation ------------------------------------------------------------------

def validate_datum(datum: FibrationDatum) -> Diagnostics:
    """Every hypothesis check for the datum, ending with the case-table match."""
    return _analyze(datum)[0]


def _analyze(datum: FibrationDatum):
    diag = Diagnostics()
    try:
        label = _run_checks(datum, diag)
    except (InvalidInput, ValueError) as exc:
        diag.add("well-formed", False, str(exc), "invalid-input")
        label = None
    return diag, label


def _common_checks(datum: FibrationDatum, diag: Diagnostics) -> bool:
    bg = datum.resolved_base_genus
    base_ok = datum.base_kind != OTHER_BASE and bg in (0, 1)
    if not diag.add("base-genus", base_ok,
                    "" if base_ok else f"base of genus {bg} has finitely many automorphisms; "
                    "infinite B(X/C) needs an elliptic or rational base", "base-genus"):
        return False
    allowed = _ACTIONS_FOR_BASE.get(datum.base_kind)
    act_ok = allowed is None or datum.action_kind in allowed
    return diag.add("action-kind", act_ok,
                    "" if act_ok else f"base {datum.base_kind} needs action kind in {allowed}, "
                    f"got {datum.action_kind}", "action-kind")


def _run_checks(datum: FibrationDatum, diag: Diagnostics):
    if not _common_checks(datum, diag):
        return None
    if datum.fibre_genus == 1:
        return _genus_one_checks(datum, diag)
    return _high_genus_checks(datum, diag)


def _high_genus_checks(datum, diag):
    g = datum.fibre_genus
    fib = datum.fibre
    gamma = datum.group if datum.group is not None else GroupSchemeSpec(datum.p, [])
    n = gamma.order()
    if not diag.add("group-etale", gamma.is_etale(),
                    "" if gamma.is_etale() else f"{gamma} is not a finite constant group", "not-etale"):
        return None
    lhs, rhs = 2 * g - 2, n * (2 * fib.quotient_genus - 2)
    rh_ok = fib.quotient_genus >= 0 and (lhs == rhs if fib.action_free else lhs > rhs)
    rel = "=" if fib.action_free else ">"
    if n == 1:
        rh_ok = fib.quotient_genus == g and fib.action_free
        msg = "" if rh_ok else "trivial group: quotient genus must equal g and the action is free"
    else:
        msg = "" if rh_ok else (f"Riemann-Hurwitz needs 2g-2 {rel} |G|(2g'-2): "
                                f"{lhs} vs {n}*({2 * fib.quotient_genus - 2}) = {rhs}")
    if not diag.add("riemann-hurwitz", rh_ok, msg, "riemann-hurwitz"):
        return None
    kind = datum.base_kind
    if kind == ELLIPTIC_BASE:
        ok = embeds_in_some_elliptic_curve(gamma)
        diag.add("group-in-elliptic-points", ok, "" if ok else f"{gamma} is not a subgroup of E'(k)",
                 "not-a-subgroup")
        return "A" if ok else None
    if kind == P1_TRIVIAL:
        ok = gamma.is_trivial()
        diag.add("group-trivial", ok, "" if ok else f"the product case has trivial group, got {gamma}",
                 "nontrivial-group")
        return "B" if ok else None
    if kind == P1_FROM_A1:
        ok = not gamma.is_trivial() and embeds_in_Ga(gamma)
        diag.add("additive-subspace", ok,
                 "" if ok else f"{gamma} is not a nontrivial F_p-subspace of k", "not-in-Ga")
        return "C" if ok else None
    ok = n > 1 and gamma.etale_is_cyclic() and n % datum.p != 0
    diag.add("cyclic-prime-to-p", ok,
             "" if ok else f"{gamma} is not mu_n(k) with n > 1 prime to p = {datum.p}", "not-in-Gm")
    return "D" if ok else None


def _genus_one_checks(datum, diag):
    E = datum.curve
    p = E.p
    lam = datum.translation_part if datum.translation_part is not None else GroupSchemeSpec(p, [])
    gam = datum.graded_part if datum.graded_part is not None else GroupSchemeSpec(p, [])
    ss = E.is_supersingular()
    local = bool(lam.of_kind("alpha") or lam.of_kind("sskernel"))
    ok = ss or not local
    if not diag.add("ordinary-excludes-alpha", ok,
                    "" if ok else f"ordinary curves contain no alpha_p; Lambda_t = {lam}", "ordinary-alpha"):
        return None
    ok = not (ss and lam.contains_mu())
    if not diag.add("frobenius-kernel-type", ok,
                    "" if ok else f"supersingular Frobenius kernels are infinitesimal unipotent; "
                    f"Lambda_t = {lam} has a mu factor", "frobenius-kernel-type"):
        diag.note("normalization: Ker F is alpha_p for supersingular curves and mu_p for ordinary ones")
        return None
    sub = ElementarySubgroup(E, lam, gam)
    elem = validate_elementary(sub)
    diag.extend(elem)
    if not elem.ok:
        return None
    whole = sub.as_spec()
    kind = datum.base_kind
    if kind == ELLIPTIC_BASE:
        ok = embeds_in_some_elliptic_curve(whole)
        if not diag.add("lambda-embeds-in-elliptic", ok,
                        "" if ok else f"Lambda = {whole} embeds in no elliptic curve C'", "not-embeddable"):
            return None
        diag.add("case-table", True)
        return "A-i" if gam.is_trivial() else "A-ii"
    if kind == P1_TRIVIAL:
        ok = whole.is_trivial()
        if not diag.add("group-trivial", ok, "" if ok else f"the product case has trivial Lambda, got {whole}",
                        "nontrivial-group"):
            return None
        diag.add("case-table", True)
        return "B"
    if kind == P1_FROM_A1:
        ok = embeds_in_Ga(whole)
        if not diag.add("embeds-in-Ga", ok, "" if ok else f"Lambda = {whole} does not embed in G_a", "not-in-Ga"):
            return None
        return _additive_table(E, lam, gam, ss, diag)
    ok = embeds_in_Gm(whole)
    if not diag.add("embeds-in-Gm", ok, "" if ok else f"Lambda = {whole} does not embed in G_m", "not-in-Gm"):
        return None
    return _multiplicative_table(E, lam, gam, diag)


def _additive_table(E, lam, gam, ss, diag):
    p = E.p
    if gam.is_trivial():
        want = parse_spec(f"alpha_{p}" if ss else f"Z/{p}", p)
        ok = lam == want
        kind = "supersingular" if ss else "ordinary"
        diag.add("case-table", ok,
                 "" if ok else f"over A1 with trivial Gamma a {kind} curve needs Lambda_t = {want}, got {lam}",
                 "case-table")
        return "C-i" if ok else None
    ok = (p in (2, 3) and gam.order() == p and j_regime(E) == "j0"
          and (lam.is_trivial() or lam == parse_spec(f"alpha_{p}", p)))
    diag.add("case-table", ok,
             "" if ok else (f"order-{gam.order()} Gamma over A1 occurs only for p in {{2, 3}} with "
                            f"|Gamma| = p, j = 0 and Lambda_t in {{0, alpha_p}}"), "case-table")
    return "C-ii" if ok else None


def _multiplicative_table(E, lam, gam, diag):
    if gam.is_trivial():
        ok = not lam.is_trivial()
        diag.add("case-table", ok, "" if ok else "D-i needs a nontrivial Lambda_t", "case-table")
        return "D-i" if ok else None
    if not lam.is_trivial():
        diag.add("case-table", False,
                 f"Lambda_t = {lam} and Gamma both nontrivial: Lambda cannot embed in G_m", "case-table")
        return None
    ok = gam.order() in D_II_FIBRES
    diag.add("case-table", ok, "" if ok else f"no fibre pair for |Gamma| = {gam.order()}", "case-table")
    return "D-ii" if ok else None


def case_hypotheses(label: str, genus: int) -> list[str]:
    """Check names that must pass for a datum labelled with this case."""
    common = ["base-genus", "action-kind"]
    if genus >= 2:
        tail = {"A": "group-in-elliptic-points", "B": "group-trivial", "C": "additive-subspace",
                "D": "cyclic-prime-to-p"}
        if label not in tail:
            raise InvalidInput(f"unknown case {label!r}")
        return common + ["group-etale", "riemann-hurwitz", tail[label]]
    elem = ["ordinary-excludes-alpha", "frobenius-kernel-type", "gamma-is-etale", "gamma-cyclic",
            "gamma-order-legal", "translation-in-curve", "translation-fixed-by-gamma"]
    tail = {"A-i": "lambda-embeds-in-elliptic", "A-ii": "lambda-embeds-in-elliptic", "B": "group-trivial",
            "C-i": "embeds-in-Ga", "C-ii": "embeds-in-Ga", "D-i": "embeds-in-Gm", "D-ii": "embeds-in-Gm"}
    if label not in tail:
        raise InvalidInput(f"unknown case {label!r}")
    return common + elem + [tail[label], "case-table"]


# -- classification --------------------------------------------------------------

def _reject(diag):
    fv = diag.first_violation
    raise ClassificationRejected(f"{fv.name}: {fv.message}" if fv else "rejected", diag)


def classify_high_genus(datum: FibrationDatum) -> ClassificationResult:
    if datum.fibre_genus < 2:
        raise InvalidInput("classify_high_genus needs fibre genus >= 2")
    diag, label = _analyze(datum)
    if not diag.ok or label is None:
        _reject(diag)
    fib = datum.fibre
    cite = citation_for(label, datum.fibre_genus)
    if label == "A":
        return ClassificationResult(label, 1, [], 1, "n/a", True, cite, datum, [], diag)
    if label == "B":
        return ClassificationResult(label, 0, [], NEG_INF, "n/a", None, cite, datum,
                                    ["F x P1 is ruled"], diag)
    if label == "C":
        fibres = [SingularFibre("inf")]
    else:
        fibres = [SingularFibre("0"), SingularFibre("inf")]
    return ClassificationResult(label, 0, fibres, NEG_INF, fib.quotient_genus, fib.action_free, cite,
                                datum, [], diag)


def classify_genus_one(datum: FibrationDatum) -> ClassificationResult:
    if datum.fibre_genus != 1:
        raise InvalidInput("classify_genus_one needs fibre genus 1")
    diag, label = _analyze(datum)
    if not diag.ok or label is None:
        _reject(diag)
    p = datum.p
    lam, gam = datum.translation_part, datum.graded_part
    notes = []
    if label in ("A-i", "A-ii"):
        fibres, base_genus = [], 1
        if label == "A-ii":
            notes.append("hyperelliptic surface; see the Bagnera-de Franchis list")
    elif label == "B":
        fibres, base_genus = [], 0
    elif label == "C-i":
        fibres, base_genus = [SingularFibre("inf", I0, p)], 0
    elif label == "C-ii":
        mult = 1 if lam.is_trivial() else p
        fibres, base_genus = [SingularFibre("inf", II_STAR, mult)], 0
    elif label == "D-i":
        n = lam.order()
        fibres, base_genus = [SingularFibre("0", I0, n), SingularFibre("inf", I0, n)], 0
    else:
        a, b = D_II_FIBRES[gam.order()]
        fibres, base_genus = [SingularFibre("0/inf", a, 1), SingularFibre("0/inf", b, 1)], 0
        notes.append("fibre pair over {0, inf} is unordered")
        if gam.order() == 6:
            notes.append("order-6 Gamma (j = 0, p >= 5): fibre pair II / II*")
    kappa = kappa_from_base(base_genus)
    return ClassificationResult(label, base_genus, fibres, kappa, "n/a", None,
                                citation_for(label, 1), datum, notes, diag)


def classify(datum: FibrationDatum) -> ClassificationResult:
    if datum.fibre_genus == 1:
        return classify_genus_one(datum)
    return classify_high_genus(datum)



def result_from_json(obj) -> ClassificationResult:
    """Rebuild a result by reclassifying its embedded datum."""
    if not isinstance(obj, dict) or "datum" not in obj:
        raise InvalidInput("result JSON must carry its datum")
    return classify(FibrationDatum.from_json(obj["datum"]))
