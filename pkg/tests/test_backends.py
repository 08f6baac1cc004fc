"""The pure-Python rational fallback must give identical results."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from prodmeasure import BACKEND

TESTS = Path(__file__).parent


def _env(backend):
    env = dict(os.environ)
    env["PRODMEASURE_RATIONAL"] = backend
    return env


def _cli(backend, *args):
    proc = subprocess.run([sys.executable, "-m", "prodmeasure", *args, "--format", "json"],
                          capture_output=True, text=True, env=_env(backend))
    return proc.returncode, json.loads(proc.stdout)


def test_fallback_backend_selected():
    proc = subprocess.run([sys.executable, "-c", "import prodmeasure; print(prodmeasure.BACKEND)"],
                          capture_output=True, text=True, env=_env("fractions"))
    assert proc.stdout.strip() == "fractions"


def test_backends_agree_on_transcript_and_suite():
    code_a, a = _cli("fractions", "transcript")
    code_b, b = _cli(BACKEND, "transcript")
    assert code_a == code_b == 0
    assert a["rows"] == b["rows"]
    code_a, a = _cli("fractions", "suite", "additivity", "--seed", "2", "--cases", "10")
    code_b, b = _cli(BACKEND, "suite", "additivity", "--seed", "2", "--cases", "10")
    assert code_a == code_b == 0
    assert a["details"] == b["details"]


def test_core_tests_pass_on_fallback():
    files = [str(TESTS / f) for f in ("test_extreal.py", "test_set1d.py", "test_set2d.py",
                                      "test_measures.py", "test_dsl.py")]
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           "--hypothesis-profile", "default", *files],
                          capture_output=True, text=True, env=_env("fractions"), cwd=TESTS.parent)
    assert proc.returncode == 0, proc.stdout[-3000:]
