import json
import os
import subprocess
import sys

import pytest

from conftest import fixture_path, golden_path, scenario_path
from looptorus import report as report_mod
from looptorus.cli import main


def test_verify_pass_fixture(capsys, tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", fixture_path("quick_pass"), "--report", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "PASS" in text and "FAIL" not in text
    rep = json.loads(out.read_text())
    assert rep["pass"] is True
    assert [s["name"] for s in rep["suites"]] == ["cocycle", "lattice", "rep"]


def test_verify_failure_exit_code(capsys, tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", fixture_path("branch_incoherent"), "--report", str(out)])
    assert code == 1
    rep = json.loads(out.read_text())
    assert rep["pass"] is False
    sec = next(s for s in rep["suites"] if s["name"] == "section3")
    assert sec["failures"]
    first = sec["failures"][0]
    assert first["check"] == "eta_transport_i"
    assert first["residual_norm_is_zero"] is False
    assert "witness" in first and "inputs" in first


def test_verify_invalid_scenario(capsys):
    code = main(["verify", fixture_path("bad_K")])
    assert code == 2
    err = capsys.readouterr().err
    assert "invalid scenario" in err and "/K" in err


def test_verify_missing_file(capsys, tmp_path):
    assert main(["verify", str(tmp_path / "nope.json")]) == 2


def test_verify_suite_selection_and_overrides(capsys, tmp_path):
    out = tmp_path / "r.json"
    code = main([
        "verify", scenario_path("n2_minus1"),
        "--suite", "torus", "--suite", "cocycle", "--suite", "torus",
        "--trials", "20", "--seed", "3", "--report", str(out),
    ])
    assert code == 0
    rep = json.loads(out.read_text())
    # declared order preserved, duplicates dropped
    assert [s["name"] for s in rep["suites"]] == ["torus", "cocycle"]
    assert rep["effective"]["trials"] == 20
    assert rep["effective"]["seed"] == 3


def test_report_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", fixture_path("quick_pass")]
    assert main(args + ["--report", str(a)]) == 0
    assert main(args + ["--report", str(b)]) == 0
    ra = report_mod.canonical(json.loads(a.read_text()))
    rb = report_mod.canonical(json.loads(b.read_text()))
    assert ra == rb


def test_report_matches_golden(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", scenario_path("identity"), "--report", str(out)]) == 0
    got = report_mod.canonical(json.loads(out.read_text()))
    want = report_mod.canonical(json.loads(open(golden_path("identity")).read()))
    assert got == want


def test_csv_summary(tmp_path, capsys):
    csv_path = tmp_path / "summary.csv"
    assert main(["verify", fixture_path("quick_pass"), "--csv", str(csv_path)]) == 0
    rows = [line.split(",") for line in csv_path.read_text().strip().splitlines()]
    assert rows[0] == ["suite", "trials", "failures", "pass"]
    assert rows[-1][0] == "total"
    assert {r[0] for r in rows[1:-1]} == {"cocycle", "lattice", "rep"}


def test_figures_rendered(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code = main([
        "verify", fixture_path("quick_pass"), "--figures", str(figdir),
    ])
    assert code == 0
    names = sorted(os.listdir(figdir))
    assert "suite_summary.png" in names
    assert "radf_lattice.png" in names  # n = 2 scenario
    out = capsys.readouterr().out
    assert "figure:" in out


def test_radf_command(capsys):
    assert main(["radf", scenario_path("n2_minus1"), "--window", "3"]) == 0
    out = capsys.readouterr().out
    assert "rad f basis columns" in out
    assert "[2, 0]" in out and "[0, 2]" in out
    assert "basis agrees" in out


def test_radf_identity_context(capsys):
    assert main(["radf", scenario_path("identity"), "--window", "2"]) == 0
    out = capsys.readouterr().out
    assert "[1, 0]" in out and "[0, 1]" in out
    assert "(25 central)" in out


def test_eval_command(capsys):
    scn = scenario_path("n2_minus1")
    assert main(["eval", "t[1,0]*t[0,1]", "--scenario", scn]) == 0
    assert capsys.readouterr().out.strip() == "t[1,1]"
    assert main(["eval", "[t[1,0],t[0,1]]", "--scenario", scn]) == 0
    assert capsys.readouterr().out.strip() == "2*t[1,1]"
    assert main(["eval", "[t[1,0]@z^2, ad[0,1]@z]", "--scenario", scn]) == 0
    assert capsys.readouterr().out.strip() == "2*t[1,1]⊗z^3"
    assert main(["eval", "[D[(0,1);0,0], ad[0,1]]", "--scenario", scn]) == 0
    assert capsys.readouterr().out.strip() == "ad[0,1]"


def test_eval_act_on(capsys):
    scn = scenario_path("n2_minus1")
    code = main(["eval", "t[1,0]", "--scenario", scn, "--act-on", "v[(1,0);0,0]"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "v[(1,0);1,0]"


def test_eval_parse_error(capsys):
    code = main(["eval", "t[1,0", "--scenario", scenario_path("n2_minus1")])
    assert code == 2
    err = capsys.readouterr().err
    assert "parse error at position 5" in err


def test_eval_semantic_error(capsys):
    code = main(["eval", "D[(1,0);1,0]", "--scenario", scenario_path("n2_minus1")])
    assert code == 2
    assert "evaluation error" in capsys.readouterr().err


def test_console_script_wiring():
    proc = subprocess.run(
        [sys.executable, "-m", "looptorus.cli", "eval", "t[0,1]*t[1,0]",
         "--scenario", scenario_path("n2_minus1")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-t[1,1]"
