"""Canonical finite unions of rational intervals and points on the real line.

Every :class:`Set1D` is stored in a unique canonical form, so structural
equality is set equality.  Boolean operations share one sweep: the
endpoints of both operands cut the line into *atoms* (open gaps and single
breakpoints), membership is constant on each atom, and the surviving atoms
are glued back into maximal intervals.

>>> a = Set1D.closed(0, 1)
>>> str(a & Set1D.closed(1, 2))
'{1}'
>>> str(a - Set1D.open(0, 1))
'{0,1}'
>>> str(Set1D.closed(0, "1/2") | Set1D.closed("1/2", 1))
'[0,1]'
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, List, Sequence, Tuple

from ._rational import RATIONAL_TYPES, Rational, to_rational
from .errors import DomainError
from .extreal import INF, ZERO, ExtReal, format_rational

NEG_INF = -math.inf
POS_INF = math.inf


def is_inf(x) -> bool:
    # the two infinities are the only float endpoints
    return isinstance(x, float)


def as_endpoint(x):
    if isinstance(x, float):
        if math.isinf(x):
            return x
        raise TypeError("finite endpoints must be exact rationals, not floats")
    if isinstance(x, str) and x.strip() in ("inf", "+inf", "-inf"):
        return NEG_INF if x.strip() == "-inf" else POS_INF
    return to_rational(x)


def format_endpoint(x) -> str:
    if x == POS_INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return format_rational(x)


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo, hi = as_endpoint(self.lo), as_endpoint(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not lo < hi:
            raise ValueError(f"interval needs lo < hi, got [{lo}, {hi}]")
        if lo == POS_INF or hi == NEG_INF:
            raise ValueError("interval endpoint on the wrong side of infinity")
        if (self.lo_closed and lo == NEG_INF) or (self.hi_closed and hi == POS_INF):
            raise ValueError("an infinite endpoint cannot be closed")

    def __contains__(self, x) -> bool:
        if self.lo < x < self.hi:
            return True
        return (self.lo_closed and x == self.lo) or (self.hi_closed and x == self.hi)

    @property
    def length(self) -> ExtReal:
        if is_inf(self.lo) or is_inf(self.hi):
            return INF
        return ExtReal(self.hi - self.lo)

    @property
    def is_bounded(self) -> bool:
        return not (is_inf(self.lo) or is_inf(self.hi))

    def shift(self, c) -> "Interval":
        lo = self.lo if is_inf(self.lo) else self.lo + c
        hi = self.hi if is_inf(self.hi) else self.hi + c
        return Interval(lo, hi, self.lo_closed, self.hi_closed)

    def __str__(self):
        return "%s%s,%s%s" % (
            "[" if self.lo_closed else "(",
            format_endpoint(self.lo),
            format_endpoint(self.hi),
            "]" if self.hi_closed else ")",
        )


# An atom is a breakpoint ``(p, p)`` or the open gap between consecutive
# breakpoints, possibly unbounded.
Atom = Tuple[object, object]


def atoms_of(breakpoints: Sequence) -> List[Atom]:
    """Cut the line at sorted, distinct ``breakpoints``."""
    out: List[Atom] = []
    prev = NEG_INF
    for p in breakpoints:
        out.append((prev, p))
        out.append((p, p))
        prev = p
    out.append((prev, POS_INF))
    return out


def representative(atom: Atom):
    lo, hi = atom
    if lo == hi:
        return lo
    if is_inf(lo) and is_inf(hi):
        return Rational(0)
    if is_inf(lo):
        return hi - 1
    if is_inf(hi):
        return lo + 1
    return (lo + hi) / 2


def glue(atoms: Sequence[Atom], keep: Sequence[bool]) -> "Set1D":
    """Canonical set built from the kept atoms of a consecutive atom list."""
    intervals: List[Interval] = []
    points: List = []
    n = len(atoms)
    i = 0
    while i < n:
        if not keep[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and keep[j + 1]:
            j += 1
        first, last = atoms[i], atoms[j]
        if i == j and first[0] == first[1]:
            points.append(first[0])
        else:
            intervals.append(Interval(first[0], last[1],
                                      first[0] == first[1], last[0] == last[1]))
        i = j + 1
    return Set1D(tuple(intervals), tuple(points))


def concat(parts: Iterable["Set1D"]) -> "Set1D":
    """Union of sets given in increasing order, each lying strictly before
    the next (touching at a shared endpoint is allowed)."""
    comps = []  # [lo, lo_closed, hi, hi_closed]
    for part in parts:
        for c in part._components():
            if comps:
                prev = comps[-1]
                if prev[2] == c[0] and (prev[3] or c[1]):
                    prev[2], prev[3] = c[2], c[3]
                    continue
            comps.append(list(c))
    intervals, points = [], []
    for lo, lc, hi, hc in comps:
        if lo == hi:
            points.append(lo)
        else:
            intervals.append(Interval(lo, hi, lc, hc))
    return Set1D(tuple(intervals), tuple(points))


@dataclass(frozen=True)
class Set1D:
    """Disjoint, non-mergeable intervals plus isolated points, both sorted."""

    intervals: Tuple[Interval, ...] = ()
    points: Tuple = ()

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls) -> "Set1D":
        return _EMPTY

    @classmethod
    def interval(cls, lo, hi, lo_closed=True, hi_closed=True) -> "Set1D":
        """One interval; ``[a,a]`` collapses to the point ``{a}``."""
        lo, hi = as_endpoint(lo), as_endpoint(hi)
        if lo == hi and lo_closed and hi_closed and not is_inf(lo):
            return cls((), (lo,))
        return cls((Interval(lo, hi, lo_closed, hi_closed),), ())

    @classmethod
    def closed(cls, lo, hi) -> "Set1D":
        return cls.interval(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi) -> "Set1D":
        return cls.interval(lo, hi, False, False)

    @classmethod
    def of_points(cls, *points) -> "Set1D":
        return cls((), tuple(sorted({to_rational(p) for p in points})))

    @classmethod
    def real_line(cls) -> "Set1D":
        return cls((Interval(NEG_INF, POS_INF, False, False),), ())

    # -- queries --------------------------------------------------------

    @cached_property
    def _los(self) -> list:
        return [iv.lo for iv in self.intervals]

    def __contains__(self, x) -> bool:
        i = bisect_left(self.points, x)
        if i < len(self.points) and self.points[i] == x:
            return True
        j = bisect_right(self._los, x) - 1
        return j >= 0 and x in self.intervals[j]

    def _components(self) -> List[tuple]:
        comps = [(iv.lo, iv.lo_closed, iv.hi, iv.hi_closed) for iv in self.intervals]
        comps.extend((p, True, p, True) for p in self.points)
        comps.sort(key=lambda c: c[0])
        return comps

    def breakpoints(self) -> list:
        return self._profile[0]

    @cached_property
    def _profile(self):
        """Own breakpoints, membership at each, and on each gap (gap ``i``
        lies just before breakpoint ``i``; one extra trailing gap)."""
        at, gaps, bps = [], [], []
        inside = False
        for lo, lc, hi, hc in self._components():
            if lo == hi:
                gaps.append(False)
                bps.append(lo)
                at.append(True)
                continue
            if not is_inf(lo):
                if bps and bps[-1] == lo:
                    at[-1] = at[-1] or lc
                else:
                    gaps.append(False)
                    bps.append(lo)
                    at.append(lc)
            gaps.append(True)
            if not is_inf(hi):
                bps.append(hi)
                at.append(hc)
            inside = is_inf(hi)
        gaps.append(inside)
        return bps, at, gaps

    def is_empty(self) -> bool:
        return not self.intervals and not self.points

    def __bool__(self):
        return not self.is_empty()

    def issubset(self, other: "Set1D") -> bool:
        return (self - other).is_empty()

    def within_unit(self) -> bool:
        """Whether the set lies inside ``[0, 1]``."""
        if self.is_empty():
            return True
        lo, hi = self.hull()
        return lo >= 0 and hi <= 1

    def is_finite(self) -> bool:
        """True iff the set is a finite point set."""
        return not self.intervals

    def is_bounded(self) -> bool:
        return all(iv.is_bounded for iv in self.intervals)

    def hull(self):
        """Infimum and supremum; raises on the empty set."""
        if self.is_empty():
            raise ValueError("empty set has no hull")
        comps = self._components()
        return comps[0][0], max(c[2] for c in comps[-2:])

    def interval_part(self) -> "Set1D":
        return Set1D(self.intervals, ())

    # -- measures -------------------------------------------------------

    def lebesgue(self) -> ExtReal:
        total = ZERO
        for iv in self.intervals:
            total = total + iv.length
        return total

    def counting(self) -> ExtReal:
        """Counting measure; only defined on subsets of ``[0, 1]``."""
        if not self.within_unit():
            raise DomainError(f"counting measure needs a subset of [0,1], got {self}")
        if self.intervals:
            return INF
        return ExtReal(Rational(len(self.points)))

    # -- set algebra ----------------------------------------------------

    def _combine(self, other: "Set1D", op: Callable[[bool, bool], bool]) -> "Set1D":
        bps_a, at_a, gap_a = self._profile
        bps_b, at_b, gap_b = other._profile
        merged = sorted(set(bps_a).union(bps_b))
        keep = []
        i = j = 0
        na, nb = len(bps_a), len(bps_b)
        for p in merged:
            keep.append(op(gap_a[i], gap_b[j]))
            in_a = in_b = None
            if i < na and bps_a[i] == p:
                in_a = at_a[i]
                i += 1
            if j < nb and bps_b[j] == p:
                in_b = at_b[j]
                j += 1
            # a breakpoint foreign to an operand sits inside one of its gaps
            keep.append(op(gap_a[i] if in_a is None else in_a,
                           gap_b[j] if in_b is None else in_b))
        keep.append(op(gap_a[i], gap_b[j]))
        return glue(atoms_of(merged), keep)

    def union(self, other: "Set1D") -> "Set1D":
        if other.is_empty():
            return self
        if self.is_empty():
            return other
        return self._combine(other, lambda a, b: a or b)

    def intersection(self, other: "Set1D") -> "Set1D":
        if self.is_empty() or other.is_empty():
            return _EMPTY
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other: "Set1D") -> "Set1D":
        if self.is_empty() or other.is_empty():
            return self
        return self._combine(other, lambda a, b: a and not b)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def shift(self, c) -> "Set1D":
        c = to_rational(c)
        if c == 0 or self.is_empty():
            return self
        return Set1D(tuple(iv.shift(c) for iv in self.intervals),
                     tuple(p + c for p in self.points))

    # -- validation and display -----------------------------------------

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` unless the value is in canonical form."""
        pts = self.points
        assert all(isinstance(p, RATIONAL_TYPES) for p in pts), "non-rational point"
        assert all(a < b for a, b in zip(pts, pts[1:])), "points not increasing"
        ivs = self.intervals
        for a, b in zip(ivs, ivs[1:]):
            assert a.hi <= b.lo, "intervals overlap or unsorted"
            if a.hi == b.lo:
                assert not a.hi_closed and not b.lo_closed, "mergeable intervals"
                assert a.hi not in pts, "point closes a gap between intervals"
        for p in pts:
            for iv in ivs:
                assert p not in iv, "point inside an interval"
                assert p != iv.lo and p != iv.hi, "point adjacent to an interval"

    def __str__(self):
        parts = [str(iv) for iv in self.intervals]
        if self.points:
            parts.append("{" + ",".join(format_rational(p) for p in self.points) + "}")
        if not parts:
            return "empty"
        return " | ".join(parts)

    def __repr__(self):
        return f"Set1D({self})"


_EMPTY = Set1D()
UNIT = Set1D((Interval(0, 1),), ())


def normalize(intervals: Iterable[Interval], points: Iterable) -> Set1D:
    """Canonical form of the union of raw intervals and points."""
    out = Set1D.of_points(*points)
    for iv in intervals:
        if not isinstance(iv, Interval):
            raise TypeError(f"expected Interval, got {iv!r}")
        out = out | Set1D((iv,), ())
    return out
