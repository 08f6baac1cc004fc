"""Brute-force cross-checks for the closed-form evaluators, and random tame sets.

``cover_search`` enumerates finite rectangle covers with grid-rational
endpoints and returns the cheapest verified cover, an upper bound for the
cover-infimum outer measure.  ``rho_restriction_lower_bound`` samples finite
restrictions ``E ∩ (A' x B')`` and returns the best value seen, a lower
bound for the c.l.d. supremum.  Neither calls ``pi_outer`` on the input
itself; the restriction sampler only evaluates it on finite-x pieces,
where it is the plain column sum.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from ._rational import Rational
from .errors import BudgetError
from .extreal import INF, ZERO, ExtReal, ext_mul, ext_sum
from .measures import pi_outer
from .set1d import UNIT, Interval, Set1D
from .set2d import EMPTY, Set2D, graph, rect

MAX_FAMILY = 20

Rectangle = Tuple[Set1D, Set1D]


@dataclass(frozen=True)
class CoverBudget:
    grid_denominator_max: int = 16
    max_rectangles: int = 32
    y_window: Interval = Interval(Rational(-4), Rational(4))

    def __post_init__(self):
        if self.grid_denominator_max < 1 or self.max_rectangles < 1:
            raise ValueError("cover budget bounds must be positive")
        if not self.y_window.is_bounded:
            raise ValueError("y_window must be bounded")

    def to_dict(self) -> dict:
        return {"grid_denominator_max": self.grid_denominator_max,
                "max_rectangles": self.max_rectangles,
                "y_window": str(self.y_window)}


@dataclass
class CoverSearch:
    """Outcome of a cover search.

    ``found_finite`` is False when no enumerated cover has a finite cost;
    ``value`` is then ``INF`` as a budget-relative verdict, not a proof.
    """

    value: ExtReal
    found_finite: bool
    rectangles: List[Rectangle]
    budget: CoverBudget

    @property
    def verdict(self) -> str:
        if self.found_finite:
            return str(self.value)
        return "no finite-value cover found"


def _snap(lo, hi, m: int) -> Tuple[Rational, Rational]:
    return Rational(math.floor(lo * m), m), Rational(math.ceil(hi * m), m)


def _cost(rects: List[Rectangle]) -> ExtReal:
    return ext_sum(ext_mul(A.counting(), B.lebesgue()) for A, B in rects)


def _x_candidates(A: Set1D, dmax: int) -> List[Set1D]:
    out = [A]
    lo, hi = A.hull()
    for m in range(1, dmax + 1):
        a, b = _snap(lo, hi, m)
        out.append(Set1D.closed(max(a, 0), min(b, 1)))
    return out


def _y_candidates(B: Set1D, budget: CoverBudget) -> List[Set1D]:
    window = Set1D((budget.y_window,), ())
    out = [B] if B.issubset(window) else []
    lo, hi = B.hull()
    for m in range(1, budget.grid_denominator_max + 1):
        cand = Set1D.closed(*_snap(lo, hi, m))
        if cand.issubset(window):
            out.append(cand)
    return out


def _best_rectangle(A: Set1D, B: Set1D, budget: CoverBudget) -> Optional[Rectangle]:
    best = None
    best_cost = None
    for Ax in _x_candidates(A, budget.grid_denominator_max):
        for By in _y_candidates(B, budget):
            if not (A.issubset(Ax) and B.issubset(By)):
                continue
            cost = ext_mul(Ax.counting(), By.lebesgue())
            if best is None or cost < best_cost:
                best, best_cost = (Ax, By), cost
    return best


def _staircase(g_offset: Rational, domain: Set1D, budget: CoverBudget) -> Optional[List[Rectangle]]:
    """Squares ``[k/m, (k+1)/m] x ([k/m, (k+1)/m] + c)`` along a graph."""
    window = Set1D((budget.y_window,), ())
    lo, hi = domain.hull()
    for m in range(1, budget.grid_denominator_max + 1):
        ks = range(math.floor(lo * m), math.ceil(hi * m))
        squares = []
        for k in ks:
            side = Set1D.closed(Rational(k, m), Rational(k + 1, m)) & UNIT
            ys = side.shift(g_offset)
            if side.is_empty() or not ys.issubset(window):
                break
            squares.append((side, ys))
        else:
            if squares:
                return squares
    return None


def _covers(e: Set2D, rects: List[Rectangle]) -> bool:
    union = EMPTY
    for A, B in rects:
        union = union | rect(A, B)
    return e.issubset(union)


def cover_search(e: Set2D, budget: CoverBudget = CoverBudget()) -> CoverSearch:
    if e.is_empty():
        return CoverSearch(ZERO, True, [], budget)
    footprint = e.y_footprint()
    if not footprint.issubset(Set1D((budget.y_window,), ())):
        raise BudgetError(f"y-footprint {footprint} exceeds window {budget.y_window}")

    graph_part: List[Rectangle] = []
    for g in e.graphs:
        stairs = _staircase(g.offset, g.domain, budget)
        if stairs is None:
            return CoverSearch(INF, False, [], budget)
        graph_part.extend(stairs)

    cells = e.disjointify_rects()
    options: List[List[Rectangle]] = []

    # one rectangle per x-cell, cheapest candidate for each
    per_cell = [_best_rectangle(A, B, budget) for A, B in cells]
    if all(r is not None for r in per_cell):
        options.append(per_cell)

    # all finite cells under a single point-set rectangle
    finite = [(A, B) for A, B in cells if A.is_finite()]
    if finite:
        pts = Set1D.empty()
        col = Set1D.empty()
        for A, B in finite:
            pts, col = pts | A, col | B
        grouped = _best_rectangle(pts, col, budget)
        rest = [_best_rectangle(A, B, budget) for A, B in cells if not A.is_finite()]
        if grouped is not None and all(r is not None for r in rest):
            options.append([grouped] + rest)

    # one bounding box
    if cells:
        xs = Set1D.empty()
        ys = Set1D.empty()
        for A, B in cells:
            xs, ys = xs | A, ys | B
        box = _best_rectangle(Set1D.closed(*xs.hull()), Set1D.closed(*ys.hull()), budget)
        if box is not None:
            options.append([box])
    else:
        options.append([])

    best: Optional[CoverSearch] = None
    for rects in options:
        total = rects + graph_part
        if len(total) > budget.max_rectangles or not _covers(e, total):
            continue
        cost = _cost(total)
        if best is None or cost < best.value:
            best = CoverSearch(cost, cost.is_finite, total, budget)
    if best is None:
        return CoverSearch(INF, False, [], budget)
    return best


def pi_cover_upper_bound(e: Set2D, budget: CoverBudget = CoverBudget()) -> ExtReal:
    return cover_search(e, budget).value


def _random_inside(rng: random.Random, A: Set1D, dmax: int) -> List[Rational]:
    out = []
    for iv in A.intervals:
        lo, hi = iv.lo, iv.hi
        d = rng.randint(2, max(2, dmax))
        out.append(lo + (hi - lo) * Rational(rng.randint(1, d - 1), d))
    return out


def rho_restriction_lower_bound(e: Set2D, samples: int = 64, seed: int = 0) -> ExtReal:
    """Best ``pi_outer(e ∩ (A' x B'))`` over sampled finite ``A'`` and bounded ``B'``.

    The first sample takes every candidate x-point; later samples thin the
    candidates at random and add more interior points of uncountable cells.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    if e.is_empty():
        return ZERO
    rng = random.Random(seed)
    fixed: List[Rational] = []
    spans: List[Set1D] = []
    for r in e.rects:
        if r.A.is_finite():
            fixed.extend(r.A.points)
        else:
            spans.append(r.A)
    for g in e.graphs:
        spans.append(g.domain)
    finite_ends = [abs(p) for p in e.y_footprint().breakpoints()]
    radius = max(finite_ends, default=Rational(0)) + 1

    best = ZERO
    for i in range(samples):
        keep = 1.0 if i == 0 else rng.uniform(0.5, 1.0)
        xs = [p for p in fixed if i == 0 or rng.random() < keep]
        for A in spans:
            for _ in range(i + 1):
                xs.extend(_random_inside(rng, A, 16))
        if not xs:
            continue
        R = radius + rng.randint(0, i)
        restricted = e & rect(Set1D.of_points(*xs), Set1D.closed(-R, R))
        value = pi_outer(restricted)
        if best < value:
            best = value
    return best


# -- random tame sets ------------------------------------------------------

CASES = ("finite_positive", "finite_null", "infinite_positive", "infinite_null")


@dataclass(frozen=True)
class GenConfig:
    """Parameters for random tame sets.

    ``case_mix`` weights the four rectangle kinds: x-factor finite or
    uncountable, crossed with y-factor of positive or zero length.
    """

    seed: int = 0
    max_patches: int = 4
    endpoint_denominator_max: int = 8
    case_mix: Tuple[Tuple[str, float], ...] = tuple((c, 1.0) for c in CASES)
    graph_weight: float = 0.25
    hole_weight: float = 0.25

    def __post_init__(self):
        if self.max_patches < 1 or self.endpoint_denominator_max < 1:
            raise ValueError("generator bounds must be positive")
        weights = dict(self.case_mix)
        if set(weights) - set(CASES):
            raise ValueError(f"unknown cases {set(weights) - set(CASES)}")
        if any(w < 0 for w in weights.values()) or not any(weights.values()):
            raise ValueError("case weights must be nonnegative and not all zero")

    def with_seed(self, seed: int) -> "GenConfig":
        return replace(self, seed=seed)

    def only(self, case: str) -> "GenConfig":
        return replace(self, case_mix=((case, 1.0),))


def _rat(rng: random.Random, lo: int, hi: int, dmax: int) -> Rational:
    d = rng.randint(1, dmax)
    return Rational(rng.randint(lo * d, hi * d), d)


def _points(rng, lo, hi, dmax, count) -> Set1D:
    return Set1D.of_points(*(_rat(rng, lo, hi, dmax) for _ in range(count)))


def _intervals(rng, lo, hi, dmax, count) -> Set1D:
    out = Set1D.empty()
    for _ in range(count):
        a, b = sorted((_rat(rng, lo, hi, dmax), _rat(rng, lo, hi, dmax)))
        if a == b:
            b = a + Rational(1, dmax)
            if b > hi:
                a, b = a - Rational(1, dmax), a
        out = out | Set1D.interval(a, b, rng.random() < 0.7, rng.random() < 0.7)
    return out


def gen_tame_set1d(cfg: GenConfig, rng: Optional[random.Random] = None,
                   lo: int = -2, hi: int = 3) -> Set1D:
    rng = rng or random.Random(cfg.seed)
    dmax = cfg.endpoint_denominator_max
    out = Set1D.empty()
    for _ in range(rng.randint(1, cfg.max_patches)):
        if rng.random() < 0.5:
            out = out | _intervals(rng, lo, hi, dmax, 1)
        else:
            out = out | _points(rng, lo, hi, dmax, rng.randint(1, 3))
    return out


def gen_rect_factors(cfg: GenConfig, rng: Optional[random.Random] = None) -> Tuple[Set1D, Set1D, str]:
    """Random ``(A, B, case)`` with ``A ⊆ [0,1]`` drawn according to ``case_mix``."""
    rng = rng or random.Random(cfg.seed)
    names, weights = zip(*cfg.case_mix)
    case = rng.choices(names, weights)[0]
    dmax = cfg.endpoint_denominator_max
    if case.startswith("finite"):
        A = _points(rng, 0, 1, dmax, rng.randint(1, 4))
    else:
        A = _intervals(rng, 0, 1, dmax, rng.randint(1, 2))
        if rng.random() < 0.3:
            A = A | _points(rng, 0, 1, dmax, 1)
    if case.endswith("positive"):
        B = _intervals(rng, -2, 3, dmax, rng.randint(1, 2))
        if rng.random() < 0.3:
            B = B | _points(rng, -2, 3, dmax, 1)
    else:
        B = _points(rng, -2, 3, dmax, rng.randint(1, 3))
    return A, B, case


def _gen_graph(cfg: GenConfig, rng: random.Random) -> Set2D:
    c = _rat(rng, -2, 2, 2) if rng.random() < 0.6 else Rational(0)
    D = _intervals(rng, 0, 1, cfg.endpoint_denominator_max, 1)
    return graph(c, D)


def gen_tame_set2d(cfg: GenConfig, rng: Optional[random.Random] = None) -> Set2D:
    rng = rng or random.Random(cfg.seed)
    out = EMPTY
    for _ in range(rng.randint(1, cfg.max_patches)):
        if rng.random() < cfg.graph_weight:
            piece = _gen_graph(cfg, rng)
        else:
            A, B, _ = gen_rect_factors(cfg, rng)
            piece = rect(A, B)
        if out and rng.random() < cfg.hole_weight:
            out = out - piece
        else:
            out = out | piece
    return out


def gen_disjoint_family(cfg: GenConfig, k: int, rng: Optional[random.Random] = None) -> List[Set2D]:
    """``k`` pairwise disjoint tame sets (some may be empty)."""
    if not 1 <= k <= MAX_FAMILY:
        raise ValueError(f"family size must be in 1..{MAX_FAMILY}")
    rng = rng or random.Random(cfg.seed)
    family: List[Set2D] = []
    covered = EMPTY
    for _ in range(k):
        piece = gen_tame_set2d(cfg, rng) - covered
        family.append(piece)
        covered = covered | piece
    return family
