"""Randomized property suites, the oracle fixture suite, and the verification transcript."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ._rational import Rational
from .dsl import evaluate
from .extreal import ext_mul, ext_sum
from .measures import (ETA, PI, RHO, XI, MeasureId, check_product_property, eta_t,
                       evaluate as measure, pi_outer, rho_cld, shift_comparison)
from .oracle import (MAX_FAMILY, CoverBudget, GenConfig, cover_search, gen_disjoint_family,
                     gen_rect_factors, gen_tame_set2d, rho_restriction_lower_bound)
from .set1d import UNIT, Set1D
from .set2d import EMPTY, Set2D, diagonal, diagonal_approx, graph, rect

SUITES = ("additivity", "monotonicity", "product", "shift", "oracle-sandwich")

DEFAULT_CASES = {"additivity": 200, "monotonicity": 200, "product": 500,
                 "shift": 200, "oracle-sandwich": 20}

# the three kinds of rectangle the product rule must handle
RECT_CASES = ("finite A", "infinite A, positive B", "infinite A, null B")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    passed: int = 0
    failed: int = 0
    counterexample: Optional[str] = None
    details: Dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed == self.cases

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "cases": self.cases,
                "passed": self.passed, "failed": self.failed, "ok": self.ok,
                "counterexample": self.counterexample, "details": self.details,
                "elapsed_s": round(self.elapsed, 3)}

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed={self.seed}, cases={self.cases}): "
                 f"{self.passed} passed, {self.failed} failed "
                 f"[{'PASS' if self.ok else 'FAIL'}] in {self.elapsed:.2f}s"]
        for key, n in self.details.items():
            lines.append(f"  {key}: {n}")
        if self.counterexample:
            lines.append(f"  first counterexample: {self.counterexample}")
        return "\n".join(lines)


def _random_weight(rng: random.Random) -> Rational:
    return Rational(rng.randint(0, 40), rng.randint(1, 8))


def sample_weights(rng: random.Random, n: int = 5) -> List[Rational]:
    """``n`` distinct positive rationals."""
    out: List[Rational] = []
    while len(out) < n:
        t = _random_weight(rng)
        if t > 0 and t not in out:
            out.append(t)
    return out


def _cfg(seed: int) -> GenConfig:
    return GenConfig(seed=seed)


def suite_product(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("product", seed, cases)
    measures = [PI, RHO, ETA] + [eta_t(t) for t in sample_weights(rng)]
    base = _cfg(seed)
    for i in range(cases):
        rect_case = RECT_CASES[i % 3]
        if rect_case == "finite A":
            kind = rng.choice(["finite_positive", "finite_null"])
        elif rect_case == "infinite A, positive B":
            kind = "infinite_positive"
        else:
            kind = "infinite_null"
        A, B, _ = gen_rect_factors(base.only(kind), rng)
        bad = [m for m in measures if not check_product_property(m, A, B)]
        report.details[rect_case] = report.details.get(rect_case, 0) + 1
        report.record(not bad, lambda: (
            f"{bad[0]}(rect({A}, {B})) = {measure(bad[0], rect(A, B))} "
            f"but mu*nu = {ext_mul(A.counting(), B.lebesgue())}"))
    return report


def suite_additivity(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("additivity", seed, cases)
    cfg = _cfg(seed)
    for _ in range(cases):
        k = rng.choice([2, 2, 3, 3, 4, 5, 6, 8, 12, MAX_FAMILY])
        family = gen_disjoint_family(cfg, k, rng)
        union = EMPTY
        for piece in family:
            union = union | piece
        bad = []
        for m in (PI, RHO, XI, ETA):
            whole = measure(m, union)
            parts = ext_sum(measure(m, piece) for piece in family)
            if whole != parts:
                bad.append((m, whole, parts))
        key = f"families of size {k}"
        report.details[key] = report.details.get(key, 0) + 1
        report.record(not bad, lambda: (
            f"{bad[0][0]}: union {bad[0][1]} != sum {bad[0][2]} for family "
            + "; ".join(str(p) for p in family)))
    report.details = dict(sorted(report.details.items(), key=lambda kv: int(kv[0].split()[-1])))
    return report


def suite_monotonicity(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("monotonicity", seed, cases)
    cfg = _cfg(seed)
    measures = [PI, RHO, XI, ETA, eta_t(_random_weight(rng))]
    for _ in range(cases):
        E, F = gen_tame_set2d(cfg, rng), gen_tame_set2d(cfg, rng)
        pairs = [(E & F, E), (E, E | F), (E - F, E)]
        bad = []
        for small, big in pairs:
            if not small.issubset(big):
                bad.append(f"{small} not a subset of {big}")
                continue
            for m in measures:
                if not measure(m, small) <= measure(m, big):
                    bad.append(f"{m}({small}) > {m}({big})")
        report.record(not bad, lambda: bad[0])
    return report


def _random_offset(rng: random.Random) -> Rational:
    while True:
        c = Rational(rng.randint(-24, 24), rng.randint(1, 8))
        if c != 0:
            return c


def suite_shift(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("shift", seed, cases)
    cfg = _cfg(seed)
    weights = sample_weights(rng)
    delta = diagonal()
    for _ in range(cases):
        e = gen_tame_set2d(cfg, rng)
        c = _random_offset(rng)
        bad = [f"{m} changed under shift by {c} on {e}: {r.before} -> {r.after}"
               for m in (PI, RHO) for r in [shift_comparison(m, e, c)] if not r.invariant]
        d = _random_offset(rng)
        bad += [f"{m} unexpectedly invariant on diag shifted by {d}"
                for m in [ETA] + [eta_t(t) for t in weights]
                if shift_comparison(m, delta, d).invariant]
        report.record(not bad, lambda: bad[0])
    return report


def fixture_sets() -> List[Tuple[str, Set2D]]:
    """Twenty fixed sets for the oracle sandwich, all inside ``[0,1] x [-4,4]``."""
    q = Rational
    d = diagonal()
    sq = rect(UNIT, UNIT)
    pts = Set1D.of_points(0, q(1, 2), 1)
    return [
        ("empty", EMPTY),
        ("diag", d),
        ("diag + 1", d.vshift(1)),
        ("unit square", sq),
        ("unit square minus diag", sq - d),
        ("{0,1/2,1} x [0,1]", rect(pts, UNIT)),
        ("{1/2} x [0,3]", rect(Set1D.of_points(q(1, 2)), Set1D.closed(0, 3))),
        ("[0,1] x {0}", rect(UNIT, Set1D.of_points(0))),
        ("{1/4,3/4} x ([0,1] | [2,5/2])",
         rect(Set1D.of_points(q(1, 4), q(3, 4)), Set1D.closed(0, 1) | Set1D.closed(2, q(5, 2)))),
        ("{1/3} x {1,2}", rect(Set1D.of_points(q(1, 3)), Set1D.of_points(1, 2))),
        ("two columns minus diag", rect(pts, Set1D.closed(-1, 1)) - d),
        ("columns | [0,1] x {2}", rect(pts, Set1D.open(-2, -1)) | rect(UNIT, Set1D.of_points(2))),
        ("graph(1/2, [0,1/2])", graph(q(1, 2), Set1D.closed(0, q(1, 2)))),
        ("diag_approx(3)", diagonal_approx(3)),
        ("[0,1/2] x [0,1]", rect(Set1D.closed(0, q(1, 2)), UNIT)),
        ("diag & {1/8,5/8} x [0,1]", d & rect(Set1D.of_points(q(1, 8), q(5, 8)), UNIT)),
        ("{0,1} x [-4,4] minus graph(-1/2, [0,1])",
         rect(Set1D.of_points(0, 1), Set1D.closed(-4, 4)) - graph(-q(1, 2), UNIT)),
        ("{1/5,2/5,3/5} x (0,1) | {1/5} x [2,3]",
         rect(Set1D.of_points(q(1, 5), q(2, 5), q(3, 5)), Set1D.open(0, 1))
         | rect(Set1D.of_points(q(1, 5)), Set1D.closed(2, 3))),
        ("unit square | diag + 2", sq | d.vshift(2)),
        ("(1/2,1] x {0,1} | diag", rect(Set1D.interval(q(1, 2), 1, False, True),
                                        Set1D.of_points(0, 1)) | d),
    ]


@dataclass
class SandwichRow:
    name: str
    rho_lower: object
    rho: object
    pi: object
    pi_upper: object
    cover_verdict: str
    chain_ok: bool
    collapse_expected: bool
    collapse_ok: bool

    @property
    def ok(self) -> bool:
        return self.chain_ok and (self.collapse_ok or not self.collapse_expected)


def sandwich(name: str, e: Set2D, budget: CoverBudget = CoverBudget(),
             samples: int = 64, seed: int = 0) -> SandwichRow:
    lower = rho_restriction_lower_bound(e, samples, seed)
    rho, pi = rho_cld(e), pi_outer(e)
    search = cover_search(e, budget)
    chain = lower <= rho <= pi <= search.value
    collapse_expected = not e.graphs and pi.is_finite
    collapse = lower == rho == pi == search.value
    return SandwichRow(name, lower, rho, pi, search.value, search.verdict,
                       chain, collapse_expected, collapse)


def suite_oracle_sandwich(seed: int, cases: int) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport("oracle-sandwich", seed, cases)
    cfg = GenConfig(seed=seed, max_patches=3)
    for i in range(cases):
        e = gen_tame_set2d(cfg, rng)
        row = sandwich(f"random #{i}", e, seed=seed + i)
        key = "collapsed to equality" if row.collapse_expected else "strict or infinite"
        report.details[key] = report.details.get(key, 0) + 1
        report.record(row.ok, lambda: (
            f"{e}: rho_lower={row.rho_lower} rho={row.rho} pi={row.pi} "
            f"pi_upper={row.pi_upper}"))
    return report


_RUNNERS = {
    "additivity": suite_additivity,
    "monotonicity": suite_monotonicity,
    "product": suite_product,
    "shift": suite_shift,
    "oracle-sandwich": suite_oracle_sandwich,
}


def run_suite(name: str, seed: int = 0, cases: Optional[int] = None) -> SuiteReport:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if cases is None:
        cases = DEFAULT_CASES[name]
    if cases < 1:
        raise ValueError("cases must be positive")
    start = time.perf_counter()
    report = _RUNNERS[name](seed, cases)
    report.elapsed = time.perf_counter() - start
    return report


# -- transcript ------------------------------------------------------------

# (query, expected value) pairs reproducing the counterexample computation
TRANSCRIPT_TABLE = [
    ("pi(diag)", "inf"),
    ("rho(diag)", "0"),
    ("xi(diag)", "1"),
    ("eta(diag)", "1"),
    ("rho(vshift(diag, 1))", "0"),
    ("xi(vshift(diag, 1))", "0"),
    ("eta(vshift(diag, 1))", "0"),
    ("eta(diag) == eta(vshift(diag, 1))", "false"),
    ("eta_t(0, diag)", "0"),
    ("eta_t(1, diag)", "1"),
    ("eta_t(2, diag)", "2"),
    ("eta_t(7/2, diag)", "7/2"),
]

# one rectangle per kind, with mu(A)*nu(B)
PRODUCT_SPOT_CHECKS = [
    ("finite A", "{0,1/2,1}", "[0,2]", "6"),
    ("infinite A, positive B", "[0,1]", "[0,1]", "inf"),
    ("infinite A, null B", "[0,1]", "{0}", "0"),
]


@dataclass
class TranscriptRow:
    query: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class Transcript:
    rows: List[TranscriptRow]
    oracle: dict
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and self.oracle["ok"]

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "rows": [{"query": r.query, "expected": r.expected,
                          "actual": r.actual, "ok": r.ok} for r in self.rows],
                "oracle": self.oracle,
                "elapsed_s": round(self.elapsed, 3)}

    def to_text(self) -> str:
        width = max(len(r.query) for r in self.rows)
        lines = [f"{'query'.ljust(width)}  {'expected':>8}  {'actual':>8}"]
        for r in self.rows:
            mark = "ok" if r.ok else "MISMATCH"
            lines.append(f"{r.query.ljust(width)}  {r.expected:>8}  {r.actual:>8}  {mark}")
        o = self.oracle
        lines.append("")
        lines.append(f"oracle (budget {o['budget']}, samples {o['samples']}):")
        for row in o["rows"]:
            lines.append(f"  {row['set']}: cover search -> {row['cover']}; "
                         f"restriction lower bound -> {row['rho_lower']}")
        lines.append("")
        lines.append("translation invariance fails: eta(diag) != eta(diag + 1)"
                     if self.ok else "TRANSCRIPT MISMATCH")
        return "\n".join(lines)


def run_transcript(budget: CoverBudget = CoverBudget(), samples: int = 16) -> Transcript:
    start = time.perf_counter()
    rows = [TranscriptRow(q, exp, evaluate(q).value_text()) for q, exp in TRANSCRIPT_TABLE]
    for _, A, B, expected in PRODUCT_SPOT_CHECKS:
        for m in ("pi", "rho", "eta"):
            rows.append(TranscriptRow(f"{m}(rect({A}, {B}))", expected,
                                      evaluate(f"{m}(rect({A}, {B}))").value_text()))
        rows.append(TranscriptRow(f"mu({A}) * nu({B})", expected,
                                  str(ext_mul(evaluate(f"mu({A})").value,
                                              evaluate(f"nu({B})").value))))

    d = diagonal()
    oracle_rows = []
    ok = True
    for name, e, want_cover, want_lower in [
        ("diag", d, "no finite-value cover found", "0"),
        ("diag + 1", d.vshift(1), "no finite-value cover found", "0"),
        ("{0,1/2,1} x [0,2]", rect(Set1D.of_points(0, Rational(1, 2), 1), Set1D.closed(0, 2)),
         "6", "6"),
    ]:
        cover = cover_search(e, budget).verdict
        lower = str(rho_restriction_lower_bound(e, samples))
        ok = ok and cover == want_cover and lower == want_lower
        oracle_rows.append({"set": name, "cover": cover, "rho_lower": lower})
    oracle = {"budget": budget.to_dict(), "samples": samples, "rows": oracle_rows, "ok": ok}
    return Transcript(rows, oracle, time.perf_counter() - start)
