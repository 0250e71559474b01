import pytest

from isofib.classifier import (D_II_FIBRES, FibrationDatum, KodairaType, SingularFibre, case_hypotheses,
                               classify, kappa_from_base, relative_aut_verdict, result_from_json,
                               validate_datum)
from isofib.cli import list_fixtures, load_document
from isofib.errors import ClassificationRejected, InvalidInput

FIXTURES = {name: load_document(name) for name in list_fixtures()}
GOLDEN = sorted(n for n, doc in FIXTURES.items() if doc["kind"] == "golden")
FORBIDDEN = sorted(n for n, doc in FIXTURES.items() if doc["kind"] == "forbidden")

# Euler numbers of the Kodaira fibres, and the order of their local monodromy
EULER = {"I_0": 0, "I_0*": 6, "II": 2, "II*": 10, "III": 3, "III*": 9, "IV": 4, "IV*": 8}
MONODROMY = {"I_0*": 2, "IV": 3, "IV*": 3, "III": 4, "III*": 4, "II": 6, "II*": 6}


def fibre_strings(result):
    return [f"{f.symbol}@{f.location}" for f in result.singular_fibres]


def datum_of(name):
    return FibrationDatum.from_json(FIXTURES[name]["datum"])


@pytest.mark.parametrize("name", GOLDEN)
def test_golden_fixture(name):
    exp = FIXTURES[name]["expected"]
    r = classify(datum_of(name))
    assert r.case_label == exp["case"]
    assert fibre_strings(r) == exp["fibres"]
    assert r.kappa == exp["kappa"]
    assert r.q == exp["q"]
    assert r.minimal == exp.get("minimal")


@pytest.mark.parametrize("name", FORBIDDEN)
def test_forbidden_fixture(name):
    exp = FIXTURES[name]["expected_rejection"]
    with pytest.raises(ClassificationRejected) as info:
        classify(datum_of(name))
    fv = info.value.diagnostics.first_violation
    assert (fv.name, fv.code) == (exp["check"], exp["code"])
    diag = validate_datum(datum_of(name))
    assert not diag.ok and diag.first_violation.name == exp["check"]


def test_atlas_covers_every_case():
    labels = {(FIXTURES[n]["datum"]["fibre_genus"] > 1, FIXTURES[n]["expected"]["case"]) for n in GOLDEN}
    assert {lab for hg, lab in labels if hg} == {"A", "B", "C", "D"}
    assert {lab for hg, lab in labels if not hg} == {"A-i", "A-ii", "B", "C-i", "C-ii", "D-i", "D-ii"}
    cii = {tuple(FIXTURES[n]["expected"]["fibres"]) for n in GOLDEN if FIXTURES[n]["expected"]["case"] == "C-ii"}
    assert ("II*@inf",) in cii and any(f[0].endswith("II*@inf") and f[0][0].isdigit() for f in cii)
    dii = {FIXTURES[n]["expected"]["fibres"][0].split("@")[0] for n in GOLDEN
           if FIXTURES[n]["expected"]["case"] == "D-ii"}
    assert {"I_0*", "IV", "III"} <= dii
    assert len(GOLDEN) >= 12 and len(FORBIDDEN) >= 5


@pytest.mark.parametrize("name", GOLDEN)
def test_golden_data_pass_their_case_hypotheses(name):
    datum = datum_of(name)
    r = classify(datum)
    diag = validate_datum(datum)
    assert diag.ok
    assert set(case_hypotheses(r.case_label, datum.fibre_genus)) <= diag.passed_names()


@pytest.mark.parametrize("name", [n for n in GOLDEN if FIXTURES[n]["datum"]["fibre_genus"] == 1])
def test_genus_one_kappa_follows_the_base(name):
    r = classify(datum_of(name))
    assert r.kappa == kappa_from_base(r.base_genus)


@pytest.mark.parametrize("name", [n for n in FIXTURES if FIXTURES[n]["datum"]["fibre_genus"] > 1])
def test_riemann_hurwitz_by_hand(name):
    d = FIXTURES[name]["datum"]
    g, fib = d["fibre_genus"], d["fibre"]
    n = datum_of(name).group.order()
    ramification = (2 * g - 2) - n * (2 * fib["quotient_genus"] - 2)
    consistent = ramification == 0 if fib["action_free"] else ramification > 0
    if FIXTURES[name]["kind"] == "golden":
        assert consistent
    elif not consistent:
        with pytest.raises(ClassificationRejected) as info:
            classify(datum_of(name))
        assert info.value.diagnostics.first_violation.name == "riemann-hurwitz"


def test_dii_fibre_pairs_by_euler_number_and_monodromy():
    # a rational elliptic surface has Euler number 12
    for n, (a, b) in D_II_FIBRES.items():
        assert EULER[str(a)] + EULER[str(b)] == 12
        assert MONODROMY[str(a)] == MONODROMY[str(b)] == n


@pytest.mark.parametrize("name", GOLDEN)
def test_result_json_round_trip(name):
    r = classify(datum_of(name))
    again = result_from_json(r.to_json())
    assert again.to_json() == r.to_json()
    assert classify(FibrationDatum.from_json(r.datum.to_json())).to_json() == r.to_json()


def test_relative_aut_verdicts():
    assert relative_aut_verdict(2, "trivial") == "finite"
    assert relative_aut_verdict(1, "trivial") == "infinitely_generated"
    assert relative_aut_verdict(1, "infinitely-many-sections") == "infinite"
    assert relative_aut_verdict(1, "finitely_many_sections") == "finite"
    with pytest.raises(InvalidInput):
        relative_aut_verdict(1, "unknown")
    with pytest.raises(InvalidInput):
        relative_aut_verdict(0, "trivial")


def test_kappa_from_base():
    assert kappa_from_base(0) == "-inf"
    assert kappa_from_base(1) == 0
    with pytest.raises(InvalidInput):
        kappa_from_base(2)


def test_case_hypotheses_reject_unknown_labels():
    with pytest.raises(InvalidInput):
        case_hypotheses("E", 2)
    with pytest.raises(InvalidInput):
        case_hypotheses("A", 1)


@pytest.mark.parametrize("obj", [
    [], {"fibre_genus": 1}, {"fibre_genus": 0, "base_kind": "elliptic", "fibre": {}},
    {"fibre_genus": 1, "base_kind": "moon", "fibre": {"curve": "p=5; a=[0,0,0,1,1]"}},
    {"fibre_genus": 1, "base_kind": "elliptic", "fibre": {}},
    {"fibre_genus": 1, "base_kind": "elliptic", "p": 7, "fibre": {"curve": "p=5; a=[0,0,0,1,1]"}},
    {"fibre_genus": 2, "base_kind": "elliptic", "fibre": {"quotient_genus": 1, "action_free": True}},
    {"fibre_genus": 1, "base_kind": "elliptic", "action_kind": "wobble", "fibre": {"curve": "p=5; a=[0,0,0,1,1]"}},
])
def test_malformed_data(obj):
    with pytest.raises(InvalidInput):
        FibrationDatum.from_json(obj)


def test_ordinary_curve_rejects_alpha_translation():
    doc = dict(FIXTURES["ci_supersingular_p5.json"]["datum"])
    doc["fibre"] = {"curve": "p=5; a=[0,0,0,1,1]"}
    with pytest.raises(ClassificationRejected) as info:
        classify(FibrationDatum.from_json(doc))
    assert info.value.diagnostics.first_violation.name == "ordinary-excludes-alpha"


def test_kodaira_symbols():
    assert str(KodairaType.parse("I_3*")) == "I_3*"
    assert str(KodairaType.parse("I5")) == "I_5"
    assert SingularFibre("inf", KodairaType("II*"), 5).symbol == "5II*"
    assert SingularFibre("0").symbol == "singular"
    with pytest.raises(InvalidInput):
        KodairaType("V")
    with pytest.raises(InvalidInput):
        KodairaType("II", 2)
