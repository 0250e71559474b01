import io
import json

import pytest

from isofib.cli import EXIT_INTERNAL, EXIT_OK, EXIT_REJECTED, EXIT_USAGE, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.lstrip().startswith("{") else text)


def test_aut_group():
    code, body = call("aut-group", "--p", "3", "--j", "0")
    assert code == EXIT_OK and body["status"] == "ok"
    assert body["result"]["order"] == 12
    assert body["schema"] == 1 and body["command"] == "aut-group"


def test_format_flag_in_either_position():
    for argv in (["--format", "table", "curve-info", "--curve", "p=5; a=[0,0,0,1,1]"],
                 ["curve-info", "--curve", "p=5; a=[0,0,0,1,1]", "--format", "table"]):
        code, text = call(*argv)
        assert code == EXIT_OK
        assert any(line.startswith("result.point_count") for line in text.splitlines())


def test_curve_info():
    code, body = call("curve-info", "--curve", "p=5; a=[0,0,0,0,1]")
    res = body["result"]
    assert code == EXIT_OK and res["supersingular_hasse"] and res["supersingular_trace"]
    assert res["point_count"] == 6


def test_torsor_classes_and_stabilizer():
    code, body = call("torsor-classes", "--base", "A1*", "--group", "mu_p", "--p", "5")
    assert code == EXIT_OK and body["result"]["count"] == 5
    code, body = call("stabilizer", "--base", "A1", "--group", "alpha_p", "--p", "3", "--rep", "t", "--brute-k", "2")
    res = body["result"]
    assert res["infinite"] and res["brute_force"]["size"] == 9


def test_reduce_and_equation():
    code, body = call("reduce", "--base", "A1", "--group", "alpha_p", "--p", "3", "--rep", "t^2")
    assert code == EXIT_OK
    assert not body["result"]["reduction"]["applicable"]
    assert body["result"]["equation"]["smooth"] is False


def test_torsion_bound():
    code, body = call("torsion-bound", "--degrees", "12", "18", "30")
    assert code == EXIT_OK and body["result"]["bound"] == 6
    code, body = call("torsion-bound", "--degrees", "0")
    assert code == EXIT_USAGE


def test_foliation_trace():
    code, body = call("foliation-trace", "--p", "7")
    assert code == EXIT_OK and body["result"]["pullback_degree"] == 28


def test_classify_then_validate_round_trip():
    code, body = call("classify", "--fixture", "dii_order4_p5.json")
    assert code == EXIT_OK and body["result"]["case"] == "D-ii"
    datum = json.dumps(body["result"]["datum"])
    code, again = call("classify", "--datum", datum)
    assert again["result"]["case"] == "D-ii"
    code, checked = call("validate", "--datum", datum)
    assert code == EXIT_OK and checked["result"]["diagnostics"]["ok"]


def test_classify_toml_fixture_and_listing():
    code, body = call("classify", "--fixture", "dii_order2_p7.toml")
    assert code == EXIT_OK and body["result"]["case"] == "D-ii"
    code, body = call("classify", "--list")
    assert "dii_order2_p7.toml" in body["result"]["fixtures"]


def test_rejection_exit_code_and_body():
    code, body = call("classify", "--fixture", "x_alpha_in_gm.json")
    assert code == EXIT_REJECTED and body["status"] == "rejected"
    assert body["diagnostics"]["first_violation"]["name"] == "embeds-in-Gm"
    code, body = call("validate", "--fixture", "x_genus2_base.json")
    assert code == EXIT_REJECTED


def test_pair_classify():
    code, body = call("pair-classify", "--curve-kind", "A1*", "--group", "mu_3 x Z/4")
    assert code == EXIT_OK and body["result"]["case"] == "D"
    code, body = call("pair-classify", "--curve-kind", "A1", "--group", "mu_3")
    assert code == EXIT_REJECTED


@pytest.mark.parametrize("argv", [
    [], ["no-such-command"], ["classify"], ["aut-group", "--p", "5"],
    ["classify", "--datum", "{not json"], ["classify", "--fixture", "missing.json"],
    ["curve-info", "--curve", "p=5; a=[0,0,0,0,0]"],
])
def test_usage_errors(argv):
    code, _ = call(*argv)
    assert code == EXIT_USAGE


def test_internal_error_exit_code(monkeypatch):
    import isofib.cli as cli

    def boom(args):
        raise RuntimeError("unexpected")

    monkeypatch.setattr(cli, "cmd_torsion_bound", boom)
    code, body = call("torsion-bound", "--degrees", "2")
    assert code == EXIT_INTERNAL and body["status"] == "internal-error"
