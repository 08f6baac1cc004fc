"""Acceptance gate: one check per release criterion, each printing PASS or FAIL."""

import random
import time

import pytest

from prodmeasure import (ETA, Finite, GenConfig, INF, Rational, diagonal, diagonal_approx,
                         eta_family, gen_tame_set2d, rho_cld, xi)
from prodmeasure.verify import fixture_sets, run_suite, run_transcript, sandwich

from strategies import probe_points_2d


@pytest.fixture
def report(capsys, request):
    lines = []
    yield lines.append
    with capsys.disabled():
        for line in lines:
            print(f"\n[acceptance] {request.node.name}: {line}")


def verdict(ok, detail):
    return f"{'PASS' if ok else 'FAIL'} ({detail})"


def test_transcript_table(report):
    t = run_transcript()
    rows = {r.query: r.actual for r in t.rows}
    expected = {"pi(diag)": "inf", "rho(diag)": "0", "xi(diag)": "1", "eta(diag)": "1",
                "eta(vshift(diag, 1))": "0"}
    ok = t.ok and all(rows[k] == v for k, v in expected.items()) and t.elapsed < 1.0
    report(verdict(ok, f"{len(t.rows)} rows exact, {t.elapsed:.3f}s < 1s"))
    assert ok, t.to_text()


def test_product_property_suite(report):
    r = run_suite("product", seed=0, cases=500)
    ok = r.ok and r.passed >= 500 and len(r.details) == 3 and r.elapsed < 10
    report(verdict(ok, f"{r.passed}/{r.cases}, cases {r.details}, {r.elapsed:.2f}s < 10s"))
    assert ok, r.to_text()


def test_additivity_suite(report):
    r = run_suite("additivity", seed=0, cases=200)
    ok = r.ok and r.passed >= 200
    report(verdict(ok, f"{r.passed}/{r.cases} families, k <= 20, {r.elapsed:.2f}s"))
    assert ok, r.to_text()


def test_shift_contrast(report):
    r = run_suite("shift", seed=0, cases=200)
    ok = r.ok and r.passed >= 200
    report(verdict(ok, f"{r.passed}/{r.cases}, {r.elapsed:.2f}s"))
    assert ok, r.to_text()


def test_infinitely_many_measures(report):
    rng = random.Random(2024)
    ts = [Rational(0), Rational(1), Rational(2), Rational(7, 2)]
    while len(ts) < 14:
        t = Rational(rng.randint(0, 1000), rng.randint(1, 97))
        if t not in ts:
            ts.append(t)
    d = diagonal()
    values = [eta_family(t, d) for t in ts]
    ok = values == [Finite(t) for t in ts] and len(set(values)) == len(ts)
    report(verdict(ok, f"{len(ts)} weights, {len(set(values))} distinct values"))
    assert ok


def test_oracle_sandwich(report):
    start = time.perf_counter()
    rows = [sandwich(name, e) for name, e in fixture_sets()]
    elapsed = time.perf_counter() - start
    collapsed = sum(r.collapse_expected for r in rows)
    bad = [r.name for r in rows if not r.ok]
    ok = len(rows) == 20 and not bad and elapsed < 60
    report(verdict(ok, f"{len(rows)} fixtures, {collapsed} collapse to equality, "
                       f"failures {bad}, {elapsed:.2f}s < 60s"))
    assert ok


def test_diagonal_approximants(report):
    bad = [n for n in range(1, 13)
           if xi(diagonal_approx(n)) != Finite(1) or rho_cld(diagonal_approx(n)) != INF]
    ok = not bad and rho_cld(diagonal()) == Finite(0)
    report(verdict(ok, f"N = 1..12, failures {bad}"))
    assert ok


def test_set_algebra_membership(report):
    rng = random.Random(99)
    cfg = GenConfig(seed=99, hole_weight=0.4, graph_weight=0.4)
    probes = agree = 0
    while probes < 1200:
        a, b = gen_tame_set2d(cfg, rng), gen_tame_set2d(cfg, rng)
        u, i, d = a | b, a & b, a - b
        for x, y in probe_points_2d([a, b], rng, 30):
            pa, pb = a.contains_point(x, y), b.contains_point(x, y)
            probes += 1
            agree += (u.contains_point(x, y) == (pa or pb)
                      and i.contains_point(x, y) == (pa and pb)
                      and d.contains_point(x, y) == (pa and not pb))
    ok = agree == probes >= 1000
    report(verdict(ok, f"{agree}/{probes} probes agree"))
    assert ok
