import io
import json
import os
import subprocess
import sys

import pytest

from prodmeasure.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_text(capsys):
    code, out, _ = run(["eval", "eta(vshift(diag, 1))"], capsys)
    assert code == 0
    assert out.splitlines() == ["eta(vshift(diag, 1))", "= 0"]


def test_eval_json(capsys):
    code, out, _ = run(["eval", "--format", "json", "pi(diag) == rho(diag)"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["value"] is False and doc["echo"] == "pi(diag) == rho(diag)"
    code, out, _ = run(["eval", "--format", "json", "eta_t(7/2, diag)"], capsys)
    assert json.loads(out)["value"] == "7/2"


def test_eval_stdin(capsys, monkeypatch):
    code, out, _ = run(["eval"], capsys, stdin="pi(diag)\n", monkeypatch=monkeypatch)
    assert code == 0 and "= inf" in out.splitlines()


@pytest.mark.parametrize("expr, code, kind", [
    ("pi(diag", 2, "syntax error"),
    ("nu(diag)", 2, "type error"),
    ("mu([0,2])", 3, "domain error"),
])
def test_eval_errors(capsys, expr, code, kind):
    got, _, err = run(["eval", expr], capsys)
    assert got == code and kind in err and "^" in err
    got, out, _ = run(["eval", "--format", "json", expr], capsys)
    doc = json.loads(out)
    assert got == code and doc["error"] == kind and doc["ok"] is False


def test_transcript(capsys):
    code, out, _ = run(["transcript"], capsys)
    assert code == 0
    assert "MISMATCH" not in out
    code, out, _ = run(["transcript", "--format", "json"], capsys)
    doc = json.loads(out)
    rows = {r["query"]: r["actual"] for r in doc["rows"]}
    assert rows["pi(diag)"] == "inf" and rows["eta(diag)"] == "1" and rows["eta_t(2, diag)"] == "2"
    assert doc["oracle"]["budget"]["grid_denominator_max"] == 16


def test_suite(capsys):
    code, out, _ = run(["suite", "product", "--seed", "4", "--cases", "30", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"] == 30 and doc["seed"] == 4


def test_suite_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("TM_SEED", "9")
    monkeypatch.setenv("TM_CASES", "12")
    code, out, _ = run(["suite", "shift", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and (doc["seed"], doc["cases"]) == (9, 12)
    code, out, _ = run(["suite", "shift", "--cases", "3", "--format", "json"], capsys)
    assert json.loads(out)["cases"] == 3


def test_suite_bad_args(capsys, monkeypatch):
    with pytest.raises(SystemExit) as info:
        main(["suite", "nonsense"])
    assert info.value.code == 2
    assert main(["suite", "shift", "--cases", "0"]) == 2
    monkeypatch.setenv("TM_CASES", "lots")
    with pytest.raises(SystemExit) as info:
        main(["suite", "shift"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "prodmeasure", "eval", "xi(diag)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("= 1")
    proc = subprocess.run([sys.executable, "-m", "prodmeasure", "eval", "mu([0,2])"],
                          capture_output=True, text=True)
    assert proc.returncode == 3
