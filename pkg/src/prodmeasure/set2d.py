"""Tame subsets of ``[0,1] x R``: rectangles with slope-1 holes plus slope-1 graphs.

A :class:`Set2D` is read fibre by fibre.  Over each x the rectangle part
contributes a column ``B(x)`` which is piecewise constant in x.  Along each
slope-1 line ``y = x + c`` the set may deviate from its columns: hole
domains remove line points from the column, graph domains add line points
outside it.  Distinct lines never meet, so these deviations are independent
and every boolean operation reduces to 1-D operations on columns (per
x-atom) and on line traces (per offset).

Normal form, produced by :func:`_build` for every value:

* ``rects`` have connected, pairwise disjoint, sorted x-factors, nonempty
  columns, and adjacent rects never share a column;
* a hole ``(c, D)`` on a rect satisfies ``D ⊆ A ∩ (B - c)`` and has no
  isolated points (those are folded into point columns);
* ``graphs`` have distinct offsets and pure-interval domains disjoint from
  the columns' own trace on that line.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .errors import DomainError
from .extreal import format_rational
from ._rational import Rational, to_rational
from .set1d import UNIT, Atom, Set1D, atoms_of, concat, glue, representative

_EMPTY1 = Set1D.empty()


@dataclass(frozen=True)
class GraphSpec:
    """The slope-1 segment ``{(x, x + offset) : x in domain}``."""

    offset: Rational
    domain: Set1D

    def __post_init__(self):
        object.__setattr__(self, "offset", to_rational(self.offset))
        if not self.domain.within_unit():
            raise DomainError(f"graph domain {self.domain} is not inside [0,1]")

    def __str__(self):
        return f"graph({format_rational(self.offset)}, {self.domain})"


@dataclass(frozen=True)
class RectPatch:
    """``A x B`` minus the graphs listed in ``holes``."""

    A: Set1D
    B: Set1D
    holes: Tuple[GraphSpec, ...] = ()

    def __str__(self):
        s = f"rect({self.A}, {self.B})"
        for h in self.holes:
            s = f"{s} \\ {h}"
        return s


@dataclass(frozen=True)
class GraphPatch:
    spec: GraphSpec

    @property
    def offset(self) -> Rational:
        return self.spec.offset

    @property
    def domain(self) -> Set1D:
        return self.spec.domain


def _unit_atoms(breakpoints: Iterable) -> List[Atom]:
    bps = {Rational(0), Rational(1)}
    bps.update(p for p in breakpoints if 0 <= p <= 1)
    return [a for a in atoms_of(sorted(bps)) if a[0] >= 0 and a[1] <= 1]


def _atom_set(atom: Atom) -> Set1D:
    lo, hi = atom
    if lo == hi:
        return Set1D((), (lo,))
    return Set1D.open(lo, hi)


def _line_base(atoms: Sequence[Atom], cols: Sequence[Set1D], c) -> Set1D:
    """``{x : x + c in column(x)}`` for a column function given per atom."""
    parts = []
    for atom, col in zip(atoms, cols):
        if col.is_empty():
            continue
        lo, hi = atom
        if lo == hi:
            if lo + c in col:
                parts.append(Set1D((), (lo,)))
        else:
            parts.append(_atom_set(atom) & col.shift(-c))
    return concat(parts)


def _runs(atoms: Sequence[Atom], cols: Sequence[Set1D]) -> List[Tuple[int, int]]:
    """Index ranges of maximal runs of atoms sharing a nonempty column."""
    out = []
    n = len(atoms)
    i = 0
    while i < n:
        if cols[i].is_empty():
            i += 1
            continue
        j = i
        while j + 1 < n and cols[j + 1] == cols[i]:
            j += 1
        out.append((i, j))
        i = j + 1
    return out


def _build(atoms: List[Atom], cols: List[Set1D], traces: Dict) -> "Set2D":
    """Normal form of the set with the given columns and exact line traces."""
    extra: Dict = {}
    removed: Dict = {}
    for c, t in traces.items():
        base = _line_base(atoms, cols, c)
        extra[c] = t - base
        removed[c] = base - t

    # Isolated line points are folded into point columns.
    isolated = {p for s in extra.values() for p in s.points}
    isolated |= {p for s in removed.values() for p in s.points}
    if isolated:
        new_atoms = _unit_atoms(
            {a[0] for a in atoms} | {a[1] for a in atoms} | isolated)
        starts = [a[0] for a in atoms]
        new_cols = []
        for atom in new_atoms:
            r = representative(atom)
            # atoms cover [0,1] in order, so the last atom starting at or
            # before r (and containing it) carries its column
            i = bisect_right(starts, r) - 1
            while not (atoms[i][0] < r < atoms[i][1] or atoms[i][0] == r == atoms[i][1]):
                i -= 1
            new_cols.append(cols[i])
        index = {a[0]: k for k, a in enumerate(new_atoms) if a[0] == a[1]}
        for c, s in extra.items():
            for p in s.points:
                k = index[p]
                new_cols[k] = new_cols[k] | Set1D((), (p + c,))
            extra[c] = s.interval_part()
        for c, s in removed.items():
            for p in s.points:
                k = index[p]
                new_cols[k] = new_cols[k] - Set1D((), (p + c,))
            removed[c] = s.interval_part()
        atoms, cols = new_atoms, new_cols

    # A hole interval can end on the closed boundary of a run and leave a
    # single point after clipping; fold such points and rebuild.
    while True:
        runs = _runs(atoms, cols)
        stray = []
        for i, j in runs:
            A = glue(atoms[i:j + 1], [True] * (j - i + 1))
            for c in removed:
                for p in (removed[c] & A).points:
                    stray.append((c, p, i if atoms[i][0] == p else j))
        if not stray:
            break
        cols = list(cols)
        for c, p, k in stray:
            cols[k] = cols[k] - Set1D((), (p + c,))
            removed[c] = removed[c] - Set1D((), (p,))

    rects: List[RectPatch] = []
    for i, j in runs:
        A = glue(atoms[i:j + 1], [True] * (j - i + 1))
        holes = []
        for c in sorted(removed):
            d = removed[c] & A
            if not d.is_empty():
                holes.append(GraphSpec(c, d))
        rects.append(RectPatch(A, cols[i], tuple(holes)))
    graphs = tuple(GraphPatch(GraphSpec(c, extra[c]))
                   for c in sorted(extra) if not extra[c].is_empty())
    return Set2D(tuple(rects), graphs)


@dataclass(frozen=True)
class Set2D:
    rects: Tuple[RectPatch, ...] = ()
    graphs: Tuple[GraphPatch, ...] = ()

    # -- fibre-level queries ----------------------------------------------

    @cached_property
    def _starts(self) -> List:
        return [r.A.hull()[0] for r in self.rects]

    def _rect_at(self, x):
        # a point rect {p} and a rect (p, q] share the start p
        i = bisect_right(self._starts, x) - 1
        for k in (i, i - 1):
            if k >= 0 and x in self.rects[k].A:
                return self.rects[k]
        return None

    def column_at(self, x) -> Set1D:
        r = self._rect_at(x)
        return _EMPTY1 if r is None else r.B

    def offsets(self) -> set:
        out = {g.offset for g in self.graphs}
        for r in self.rects:
            out.update(h.offset for h in r.holes)
        return out

    def line_trace(self, c) -> Set1D:
        """``{x : (x, x + c) in self}``."""
        c = to_rational(c)
        parts = []
        for r in self.rects:
            part = r.A & r.B.shift(-c)
            for h in r.holes:
                if h.offset == c:
                    part = part - h.domain
            parts.append(part)
        out = concat(parts)
        for g in self.graphs:
            if g.offset == c:
                out = out | g.domain
        return out

    def contains_point(self, x, y) -> bool:
        x, y = to_rational(x), to_rational(y)
        if not 0 <= x <= 1:
            return False
        c = y - x
        for g in self.graphs:
            if g.offset == c and x in g.domain:
                return True
        r = self._rect_at(x)
        if r is None:
            return False
        for h in r.holes:
            if h.offset == c and x in h.domain:
                return False
        return y in r.B

    def fiber(self, x) -> Set1D:
        """``{y : (x, y) in self}``."""
        x = to_rational(x)
        if not 0 <= x <= 1:
            return _EMPTY1
        out = self.column_at(x)
        r = self._rect_at(x)
        if r is not None and r.holes:
            out = out - Set1D.of_points(*(x + h.offset for h in r.holes if x in h.domain))
        extra = [x + g.offset for g in self.graphs if x in g.domain]
        if extra:
            out = out | Set1D.of_points(*extra)
        return out

    def finite_x_support(self) -> bool:
        """Whether the set lives over finitely many x (point rects only)."""
        return not self.graphs and all(r.A.is_finite() for r in self.rects)

    def diag_trace(self) -> Set1D:
        """Preimage of ``self ∩ Δ`` under ``x -> (x, x)``."""
        return self.line_trace(0)

    def disjointify_rects(self) -> List[Tuple[Set1D, Set1D]]:
        """Disjoint x-cells covering the rect footprint, each with its column.

        Holes and graphs are ignored.
        """
        return [(r.A, r.B) for r in self.rects]

    def y_footprint(self) -> Set1D:
        out = _EMPTY1
        for r in self.rects:
            out = out | r.B
        for g in self.graphs:
            lo, hi = g.domain.hull()
            out = out | Set1D.closed(lo + g.offset, hi + g.offset)
        return out

    # -- set algebra ------------------------------------------------------

    def _combine(self, other: "Set2D", op: Callable[[Set1D, Set1D], Set1D]) -> "Set2D":
        bps = set()
        for r in self.rects + other.rects:
            bps.update(r.A.breakpoints())
        atoms = _unit_atoms(bps)
        cols = []
        memo = {}
        for atom in atoms:
            rep = representative(atom)
            a, b = self.column_at(rep), other.column_at(rep)
            key = (id(a), id(b))
            if key not in memo:
                memo[key] = op(a, b)
            cols.append(memo[key])
        traces = {c: op(self.line_trace(c), other.line_trace(c))
                  for c in self.offsets() | other.offsets()}
        return _build(atoms, cols, traces)

    def union(self, other: "Set2D") -> "Set2D":
        if other.is_empty():
            return self
        if self.is_empty():
            return other
        return self._combine(other, Set1D.union)

    def intersection(self, other: "Set2D") -> "Set2D":
        if self.is_empty() or other.is_empty():
            return EMPTY
        if other.finite_x_support():
            self, other = other, self
        if self.finite_x_support():
            # a finite union of columns: intersect fibre by fibre
            rects = []
            for r in self.rects:
                x = r.A.points[0]
                col = r.B & other.fiber(x)
                if not col.is_empty():
                    rects.append(RectPatch(r.A, col))
            return Set2D(tuple(rects), ())
        return self._combine(other, Set1D.intersection)

    def difference(self, other: "Set2D") -> "Set2D":
        if self.is_empty() or other.is_empty():
            return self
        return self._combine(other, Set1D.difference)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def vshift(self, c) -> "Set2D":
        """``{(x, y + c) : (x, y) in self}``; the normal form is preserved."""
        c = to_rational(c)
        if c == 0:
            return self
        rects = tuple(
            RectPatch(r.A, r.B.shift(c),
                      tuple(GraphSpec(h.offset + c, h.domain) for h in r.holes))
            for r in self.rects)
        graphs = tuple(GraphPatch(GraphSpec(g.offset + c, g.domain)) for g in self.graphs)
        return Set2D(rects, graphs)

    def is_empty(self) -> bool:
        return not self.rects and not self.graphs

    def __bool__(self):
        return not self.is_empty()

    def issubset(self, other: "Set2D") -> bool:
        return (self - other).is_empty()

    def same_set(self, other: "Set2D") -> bool:
        return self.issubset(other) and other.issubset(self)

    # -- validation and display -------------------------------------------

    def check_invariants(self) -> None:
        prev_hi = None
        prev = None
        for r in self.rects:
            r.A.check_invariants()
            r.B.check_invariants()
            assert not r.A.is_empty() and not r.B.is_empty(), "empty factor"
            assert r.A.issubset(UNIT), "x-factor outside [0,1]"
            assert len(r.A.intervals) + len(r.A.points) == 1, "x-factor not connected"
            lo, hi = r.A.hull()
            if prev is not None:
                assert prev_hi <= lo, "x-factors overlap or unsorted"
                assert (prev.A & r.A).is_empty(), "x-factors overlap"
                merged = prev.A | r.A
                if len(merged.intervals) + len(merged.points) == 1:
                    assert prev.B != r.B, "adjacent rects with equal columns"
            prev, prev_hi = r, hi
            offs = [h.offset for h in r.holes]
            assert offs == sorted(set(offs)), "hole offsets repeated or unsorted"
            for h in r.holes:
                assert not h.domain.is_empty(), "empty hole"
                assert not h.domain.points, "isolated hole point"
                assert h.domain.issubset(r.A & r.B.shift(-h.offset)), "hole outside rect"
        offs = [g.offset for g in self.graphs]
        assert offs == sorted(set(offs)), "graph offsets repeated or unsorted"
        for g in self.graphs:
            g.domain.check_invariants()
            assert g.domain.intervals and not g.domain.points, "graph not pure-interval"
            assert g.domain.issubset(UNIT)
            for r in self.rects:
                assert (g.domain & r.A & r.B.shift(-g.offset)).is_empty(), \
                    "graph overlaps a column"

    def __str__(self):
        terms = []
        for r in self.rects:
            terms.append(f"({r})" if r.holes else str(r))
        terms.extend(str(g.spec) for g in self.graphs)
        if not terms:
            return "rect(empty, empty)"
        return " | ".join(terms)

    def __repr__(self):
        return f"Set2D({self})"


EMPTY = Set2D()


def rect(A: Set1D, B: Set1D) -> Set2D:
    """The measurable rectangle ``A x B``; ``A`` must lie in ``[0, 1]``."""
    if not A.within_unit():
        raise DomainError(f"rectangle x-factor {A} is not inside [0,1]")
    if A.is_empty() or B.is_empty():
        return EMPTY
    atoms = _unit_atoms(A.breakpoints())
    cols = [B if representative(a) in A else _EMPTY1 for a in atoms]
    return _build(atoms, cols, {})


def graph(c, D: Set1D) -> Set2D:
    """``{(x, x + c) : x in D}`` for ``D`` inside ``[0, 1]``."""
    if not D.within_unit():
        raise DomainError(f"graph domain {D} is not inside [0,1]")
    if D.is_empty():
        return EMPTY
    atoms = _unit_atoms(())
    return _build(atoms, [_EMPTY1] * len(atoms), {to_rational(c): D})


def diagonal() -> Set2D:
    return graph(0, UNIT)


def diagonal_approx(n: int) -> Set2D:
    """Intersection over ``m = 1..n`` of the unions of squares
    ``[k/m, (k+1)/m]^2`` for ``k = 0..m-1``; always contains the diagonal."""
    if n < 1:
        raise ValueError("diagonal_approx needs n >= 1")
    out = None
    for m in range(1, n + 1):
        layer = EMPTY
        for k in range(m):
            side = Set1D.closed(Rational(k, m), Rational(k + 1, m))
            layer = layer | rect(side, side)
        out = layer if out is None else out & layer
    return out
