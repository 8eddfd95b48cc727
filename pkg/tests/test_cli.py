"""Command-line front end: output and exit codes."""

import json

import pytest

from prymcusps.cli import EXIT_INVALID_INPUT, EXIT_OK, EXIT_VERIFICATION_FAILED, main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_json(capsys):
    code, out, _ = _run(capsys, "enumerate", "17")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [(r["w"], r["h"], r["t"], r["e"], r["eps"]) for r in rows] == [
        (1, 1, 0, -3, 1),
        (1, 1, 0, -3, -1),
        (1, 2, 0, -1, -1),
        (2, 1, 0, -1, 1),
        (2, 1, 0, -1, -1),
        (2, 1, 0, 1, -1),
    ]
    assert [r["component"] for r in rows] == [1, 2, 1, 2, 1, 2]


def test_enumerate_csv(capsys):
    code, out, _ = _run(capsys, "enumerate", "12", "--csv")
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0].startswith("D,w,h,t,e,eps,type,component")
    assert len(lines) == 3


def test_enumerate_empty(capsys):
    code, out, _ = _run(capsys, "enumerate", "13")
    assert code == EXIT_OK
    assert json.loads(out) == []


@pytest.mark.parametrize("D", ["16", "15", "0", "-8", "abc"])
def test_invalid_discriminant_exit_code(capsys, D):
    code, out, err = _run(capsys, "enumerate", D)
    assert code == EXIT_INVALID_INPUT
    assert out == ""
    assert "error" in err


def test_unknown_command(capsys):
    code, _, err = _run(capsys, "frobnicate", "17")
    assert code == EXIT_INVALID_INPUT


def test_components(capsys):
    code, out, _ = _run(capsys, "components", "41")
    assert code == EXIT_OK
    payload = json.loads(out)
    first, second = payload["components"]
    assert first["cusps"] == second["cusps"]
    assert "note" not in payload


def test_components_single(capsys):
    code, out, _ = _run(capsys, "components", "12")
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["note"] == "single component"
    assert len(payload["components"]) == 1


def test_galois(capsys):
    code, out, _ = _run(capsys, "galois", "17")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload) == 3
    assert all(o["labels"] == [1, 2] and not o["fixed"] for o in payload)
    assert payload[0]["members"] == ["[1,1,-3,+1]", "[1,1,-3,-1]"]


def test_stable(capsys):
    code, out, _ = _run(capsys, "stable", "17", "--prec", "8")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload) == 6
    last = payload[-1]
    assert last["algebraic"] == "[2,1,1,-1]"
    assert last["s_exact"] == "-1/4 + 1/4*sqrt(17)"
    assert last["x1"]["real"].startswith("-1.1415109")
    assert not last["complex"]
    assert payload[4]["complex"]


def test_stable_rejects_bad_precision(capsys):
    code, _, _ = _run(capsys, "stable", "17", "--prec", "0")
    assert code == EXIT_INVALID_INPUT


def test_homology_requires_odd(capsys):
    code, out, err = _run(capsys, "homology", "12")
    assert code == EXIT_INVALID_INPUT
    assert "odd discriminant" in err


def test_homology(capsys):
    code, out, _ = _run(capsys, "homology", "17")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert [p["restricted_pairing_even"] for p in payload] == [False, True, False, True, False, True]
    assert [p["component"] for p in payload] == [1, 2, 1, 2, 1, 2]


def test_verify_small_range(capsys):
    code, out, err = _run(capsys, "verify", "--dmax", "60")
    payload = json.loads(out)
    assert code == EXIT_OK, err
    assert payload["passed"]
    assert payload["discriminants"] > 0
    assert all(p["failed"] == 0 for p in payload["properties"])


def test_verify_rejects_small_dmax(capsys):
    code, _, _ = _run(capsys, "verify", "--dmax", "3")
    assert code == EXIT_INVALID_INPUT


def test_verify_failure_exit_code(capsys, monkeypatch):
    from prymcusps.models.schemas import PropertyTally, VerificationReport
    from prymcusps.workflows import orchestrator

    failing = VerificationReport(
        dmax=20,
        discriminants=1,
        properties=[PropertyTally(name="galois_involution", checked=1, failed=1, first_counterexample="D=17 x")],
    )
    monkeypatch.setattr(orchestrator.VerificationOrchestrator, "run", lambda self, dmax, dmin=5: failing)
    code, _, err = _run(capsys, "verify", "--dmax", "20")
    assert code == EXIT_VERIFICATION_FAILED
    assert "galois_involution" in err


def test_schema(capsys):
    code, out, _ = _run(capsys, "schema")
    assert code == EXIT_OK
    schema = json.loads(out)
    assert "s_exact" in schema["properties"]
