import json
import subprocess
import sys

import pytest

from preradicals import cli, verify
from preradicals.report import Report

from .conftest import DATA, GOLDEN


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_a2(capsys):
    code, out, _ = run(capsys, "enumerate", "--quiver", str(DATA / "a2.json"))
    assert code == cli.EXIT_OK
    assert out.startswith("8 preradicals")
    assert "[S₂,S₁,0]" in out


def test_enumerate_a1(capsys):
    code, out, _ = run(capsys, "enumerate", "--quiver", str(DATA / "a1.json"))
    assert code == 0 and out.startswith("2 preradicals")


def test_enumerate_is_field_independent(capsys):
    _, out2, _ = run(capsys, "enumerate", "--quiver", str(DATA / "a3.json"), "--format", "json")
    _, out3, _ = run(capsys, "enumerate", "--quiver", str(DATA / "a3.json"), "--field", "3", "--format", "json")
    assert json.loads(out2)["count"] == json.loads(out3)["count"] == 64


def test_lattice_dot_is_golden(capsys):
    code, out, _ = run(capsys, "lattice", "--quiver", str(DATA / "a2.json"), "--format", "dot")
    assert code == 0
    assert out == (GOLDEN / "a2_lattice.dot").read_text()


def test_lattice_json_and_only(capsys):
    _, out, _ = run(capsys, "lattice", "--format", "json")
    assert len(json.loads(out)["covers"]) == 10
    _, out, _ = run(capsys, "lattice", "--only", "idempotent", "--format", "json")
    assert len(json.loads(out)["nodes"]) == 6


def test_op_examples(capsys):
    _, out, _ = run(capsys, "op", "product", "rho1", "rho1", "--quiver", str(DATA / "a2.json"))
    assert out.splitlines()[0].startswith("[0,0,0]")
    _, out, _ = run(capsys, "op", "alpha", "--identity", "S1")
    assert out.splitlines()[0].startswith("[0,S₁,S₁]")
    assert "idempotent" in out
    code, out, _ = run(capsys, "op", "delta", "xi")
    assert code == 0 and "opposite" in out


def test_op_join_json(capsys):
    _, out, _ = run(capsys, "op", "join", "rho1", "gamma0", "--format", "json")
    assert json.loads(out)["name"] == "ξ"


def test_galois_commands(capsys):
    code, out, _ = run(capsys, "galois", "--quiver", str(DATA / "a2.json"), "--adjunction", "lan-res:1")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "galois", "--adjunction", "iso:identity")
    assert code == 0 and "mutually inverse" in out
    code, out, _ = run(capsys, "galois", "--opposite")
    assert code == 0 and "duality squares" in out


def test_verify_joins_a3(capsys):
    code, out, _ = run(capsys, "verify", "joins", "--quiver", str(DATA / "a3.json"))
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1].removeprefix("SUMMARY "))
    assert summary["ok"] and summary["failed"] == 0


@pytest.mark.parametrize("argv", [
    ("enumerate", "--field", "4"),
    ("op", "product", "zeta", "rho1"),
    ("op", "product", "rho1"),
    ("galois", "--adjunction", "ran-res:1"),
    ("enumerate", "--quiver", "no/such/file.json"),
    ("enumerate", "--quiver", '{"vertices": 4, "arrows": [[0,1],[0,2],[0,3]]}'),
    ("frobnicate",),
])
def test_input_errors_exit_one(capsys, argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    capsys.readouterr()
    assert code == cli.EXIT_INPUT


def test_capacity_exits_two(capsys, tmp_path):
    limits = tmp_path / "limits.json"
    limits.write_text(json.dumps({"preradical_candidates": 5}))
    code, _, err = run(capsys, "enumerate", "--quiver", "a3", "--limits", str(limits))
    assert code == cli.EXIT_CAPACITY
    assert "capacity" in err


def test_capacity_from_environment(capsys, tmp_path, monkeypatch):
    limits = tmp_path / "limits.json"
    limits.write_text(json.dumps({"preradical_candidates": 5}))
    monkeypatch.setenv("PRERADICAL_LIMITS", str(limits))
    code, _, _ = run(capsys, "enumerate", "--quiver", "a3")
    assert code == cli.EXIT_CAPACITY


def test_failed_verification_exits_three(capsys, monkeypatch):
    def broken(q, p):
        rep = Report("order")
        rep.record("always fails", False, "planted")
        return rep

    monkeypatch.setitem(verify.SUITE_FUNCTIONS, "order", broken)
    code, out, _ = run(capsys, "verify", "order", "--quiver", "a2")
    assert code == cli.EXIT_VERIFY
    assert "planted" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "preradicals", "enumerate", "--quiver", "a1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("2 preradicals")
