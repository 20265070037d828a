import json
import subprocess
import sys

import pytest

from johnsonlab.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out = json.loads(capsys.readouterr().out)
    assert (code == 0) is (out["status"] == "ok")
    return code, out


def test_member_examples(capsys):
    base = ("member", "--series", "zassenhaus", "--p", "3", "--word", "x1 x1 x1")
    code, out = run(capsys, *base, "--depth", "3")
    assert code == 0 and out["data"]["verdict"] is True
    code, out = run(capsys, *base, "--depth", "4")
    assert out["data"]["verdict"] is False and out["data"]["witness_monomial"] == ["1", "1", "1"]
    for depth in ("1", "4", "7"):
        code, out = run(capsys, "member", "--series", "stallings", "--p", "3", "--word", "", "--depth", depth)
        assert out["data"]["verdict"] is True
    code, out = run(capsys, "member", "--series", "stallings", "--p", "3", "--word", "x1 x2", "--depth", "5")
    assert out["data"]["verdict"] == "unknown"


def test_tau_examples(capsys):
    for expr in ("sep1", "Ta1^3", "identity"):
        code, out = run(capsys, "tau", "--map", expr, "--level", "1", "--variant", "z", "--p", "3")
        assert code == 0
        assert all(row == [] for row in out["data"]["rows"])
    code, out = run(capsys, "tau", "--map", "bp1", "--variant", "z", "--p", "3")
    assert out["data"]["wedge3"]["coordinates"] == {"a1^b1^b2": "2", "a2^b1^b2": "2"}
    code, out = run(capsys, "tau", "--map", "Tb2^5", "--variant", "s", "--p", "5")
    assert code == 0 and out["data"]["ring"] == "F5"


def test_tau_exit_codes(capsys):
    code, out = run(capsys, "tau", "--map", "Ta1", "--variant", "integral")
    assert code == 3 and out["status"] == "error"
    code, _ = run(capsys, "tau", "--map", "Tq9", "--variant", "z", "--p", "3")
    assert code == 2
    code, _ = run(capsys, "tau", "--map", "sep1", "--variant", "z")
    assert code == 2


def test_parse_errors(capsys):
    code, _ = run(capsys, "member", "--series", "lcs", "--depth", "2", "--word", "x9")
    assert code == 2
    code, _ = run(capsys, "member", "--series", "lcs", "--depth", "2", "--word", "y1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["member", "--series", "bogus", "--depth", "2"])
    assert exc.value.code == 2


def test_fox_and_magnus(capsys):
    code, out = run(capsys, "fox", "--word", "x1 x2", "--index", "1")
    assert out["data"]["augmentation"] == "1"
    code, out = run(capsys, "magnus", "--word", "x1 x2", "--degree", "2", "--monomial", "1 2")
    assert code == 0 and out["data"]["coefficient"] == "1"


def test_heegaard(capsys, tmp_path):
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps({"g": 2, "ring": "Z", "entries": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}))
    code, out = run(capsys, "heegaard", "--matrix", str(ident), "--p", "3")
    assert code == 0
    assert out["data"]["residual"] == [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
    omega = tmp_path / "omega.json"
    omega.write_text(json.dumps([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]))
    code, _ = run(capsys, "heegaard", "--matrix", str(omega), "--p", "3")
    assert code == 4


def test_other_subcommands(capsys):
    code, out = run(capsys, "sample", "--series", "stallings", "--depth", "2", "--budget", "3", "--seed", "1")
    assert code == 0 and len(out["data"]["words"]) == 3
    code, out = run(capsys, "perron", "--map", "Ta1^3", "--k", "2", "--p", "3")
    assert out["data"]["perron"] is True and out["data"]["zassenhaus"] is True
    code, out = run(capsys, "mapclass", "--map", "Ta1*Tb1", "--p", "3", "--member", "zassenhaus:1")
    assert out["data"]["congruence_level"] == "0" and out["data"]["filtration_member"] is False
    code, out = run(capsys, "mapclass", "--map", "Tc1^3", "--p", "3")
    assert out["data"]["congruence_level"] == "1" and "sp_abel" in out["data"]
    code, out = run(capsys, "catalog", "--g", "2")
    assert code == 0
    code, out = run(capsys, "lift", "--i", "1", "--j", "2", "--p", "3", "--g", "2")
    assert code == 0 and out["data"]["M_match"] is True
    code, out = run(capsys, "cofinality", "--direction", "ZtoS", "--depth", "2", "--p", "3", "--budget", "10")
    assert code == 0 and out["data"]["counterexamples"] == []
    code, out = run(capsys, "selftest", "--suite", "powers")
    assert code == 0


def test_every_subcommand_is_exercised():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    exercised = {"member", "tau", "fox", "magnus", "heegaard", "sample", "perron",
                 "mapclass", "catalog", "lift", "cofinality", "selftest"}
    assert set(sub.choices) == exercised


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "johnsonlab", "sample", "--series", "zassenhaus", "--depth", "3",
           "--budget", "5", "--seed", "4", "--p", "3"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["status"] == "ok"
