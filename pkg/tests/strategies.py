"""Hypothesis strategies and probe-point helpers shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from prodmeasure import GenConfig, Rational, Set1D, Set2D, gen_tame_set1d, gen_tame_set2d
from prodmeasure.set1d import Interval, is_inf

rationals = st.builds(lambda p, q: Rational(p, q),
                      st.integers(-24, 24), st.integers(1, 8))
nonneg_rationals = st.builds(lambda p, q: Rational(p, q),
                             st.integers(0, 40), st.integers(1, 8))


@st.composite
def raw_intervals(draw, lo=-3, hi=3):
    a = draw(st.integers(lo * 4, hi * 4))
    b = draw(st.integers(a + 1, hi * 4 + 1))
    return Interval(Rational(a, 4), Rational(b, 4), draw(st.booleans()), draw(st.booleans()))


@st.composite
def set1ds(draw):
    return gen_tame_set1d(GenConfig(seed=draw(st.integers(0, 10**6))))


@st.composite
def set2ds(draw, **kw):
    seed = draw(st.integers(0, 10**6))
    return gen_tame_set2d(GenConfig(seed=seed, **kw))


def probe_values_1d(sets, extra=()):
    """Every breakpoint of ``sets``, plus midpoints and points just outside."""
    bps = sorted({b for s in sets for b in s.breakpoints() if not is_inf(b)} | set(extra))
    out = set(bps)
    for a, b in zip(bps, bps[1:]):
        out.add((a + b) / 2)
    if bps:
        out.add(bps[0] - 1)
        out.add(bps[-1] + 1)
    else:
        out.add(Rational(0))
    return sorted(out)


def probe_points_2d(sets, rng: random.Random, n: int = 60):
    """Rational probe points aimed at the structure of ``sets``.

    Includes points on every slope-1 line that appears, and on the
    diagonal, plus random grid points.
    """
    xs = [Rational(0), Rational(1)]
    ys = []
    offsets = {Rational(0)}
    for s in sets:
        for r in s.rects:
            xs.extend(b for b in r.A.breakpoints())
            ys.extend(b for b in r.B.breakpoints() if not is_inf(b))
            for h in r.holes:
                offsets.add(h.offset)
                xs.extend(h.domain.breakpoints())
        for g in s.graphs:
            offsets.add(g.offset)
            xs.extend(g.domain.breakpoints())
    xs = sorted(set(xs))
    xs = sorted(set(xs) | {(a + b) / 2 for a, b in zip(xs, xs[1:])})
    xs = [x for x in xs if 0 <= x <= 1]
    ys = sorted(set(ys) | {Rational(0)})
    ys = sorted(set(ys) | {(a + b) / 2 for a, b in zip(ys, ys[1:])} | {ys[0] - 1, ys[-1] + 1})
    pts = []
    for _ in range(n):
        x = rng.choice(xs)
        if rng.random() < 0.5:
            pts.append((x, x + rng.choice(sorted(offsets))))
        else:
            pts.append((x, rng.choice(ys)))
    return pts


def as_fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))
