"""Exact product measures on tame subsets of ``[0,1] x R``.

The factors are the counting measure on ``[0,1]`` (not sigma-finite) and
Lebesgue measure on ``R``.  On tame sets the evaluators reduce to closed
forms:

* ``pi_outer`` (rectangle-cover outer measure): infinite as soon as a
  positive-length slope-1 graph is present, since any countable cover of
  such a segment needs a rectangle with uncountable x-factor and a
  y-factor of positive length.  Otherwise it is the sum over disjoint
  x-cells of ``counting(cell) * lebesgue(column)``.  Holes remove one point
  per line from each column and never change a column's length.
* ``rho_cld`` (supremum over finite-measure rectangles): graphs and holes
  meet every finite x-set in finitely many points, so only the rectangle
  cells count, with the same cell formula as ``pi_outer``.
* ``xi``: Lebesgue measure of the diagonal trace ``{x : (x, x) in E}``.
* ``eta = rho + xi`` and the family ``eta_t = rho + t * xi`` for ``t >= 0``.

>>> from .set2d import diagonal
>>> d = diagonal()
>>> [str(m(d)) for m in (pi_outer, rho_cld, xi, eta)]
['inf', '0', '1', '1']
>>> str(eta(d.vshift(1)))
'0'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Sequence

from ._rational import Rational, to_rational
from .errors import DomainError
from .extreal import INF, ExtReal, Finite, ext_add, ext_mul, ext_sum, format_rational
from .set1d import Set1D
from .set2d import Set2D, rect


def _cell_sum(e: Set2D) -> ExtReal:
    return ext_sum(ext_mul(A.counting(), B.lebesgue()) for A, B in e.disjointify_rects())


def pi_outer(e: Set2D) -> ExtReal:
    if e.graphs:
        return INF
    return _cell_sum(e)


def rho_cld(e: Set2D) -> ExtReal:
    return _cell_sum(e)


def xi(e: Set2D) -> ExtReal:
    return e.diag_trace().lebesgue()


def eta(e: Set2D) -> ExtReal:
    return ext_add(rho_cld(e), xi(e))


def eta_family(t, e: Set2D) -> ExtReal:
    t = to_rational(t)
    if t < 0:
        raise DomainError(f"eta_t needs t >= 0, got {t}")
    return ext_add(rho_cld(e), ext_mul(Finite(t), xi(e)))


@dataclass(frozen=True)
class MeasureId:
    """One of ``pi``, ``rho``, ``xi``, ``eta`` or ``eta_t`` with weight ``t``."""

    name: str
    t: Optional[Rational] = None

    def __post_init__(self):
        if self.name not in ("pi", "rho", "xi", "eta", "eta_t"):
            raise ValueError(f"unknown measure {self.name!r}")
        if (self.name == "eta_t") != (self.t is not None):
            raise ValueError("eta_t and only eta_t carries a weight")
        if self.t is not None:
            object.__setattr__(self, "t", to_rational(self.t))
            if self.t < 0:
                raise DomainError(f"eta_t needs t >= 0, got {self.t}")

    def __call__(self, e: Set2D) -> ExtReal:
        return evaluate(self, e)

    def __str__(self):
        if self.t is None:
            return self.name
        return f"eta_t({format_rational(self.t)})"


PI = MeasureId("pi")
RHO = MeasureId("rho")
XI = MeasureId("xi")
ETA = MeasureId("eta")


def eta_t(t) -> MeasureId:
    return MeasureId("eta_t", to_rational(t))


_EVALUATORS = {"pi": pi_outer, "rho": rho_cld, "xi": xi, "eta": eta}


def evaluate(m: MeasureId, e: Set2D) -> ExtReal:
    if m.name == "eta_t":
        return eta_family(m.t, e)
    return _EVALUATORS[m.name](e)


def check_product_property(m: MeasureId, A: Set1D, B: Set1D) -> bool:
    """Whether ``m(A x B) == counting(A) * lebesgue(B)``."""
    expected = ext_mul(A.counting(), B.lebesgue())
    return evaluate(m, rect(A, B)) == expected


class ShiftComparison(NamedTuple):
    before: ExtReal
    after: ExtReal
    invariant: bool


def shift_comparison(m: MeasureId, e: Set2D, c) -> ShiftComparison:
    before = evaluate(m, e)
    after = evaluate(m, e.vshift(c))
    return ShiftComparison(before, after, before == after)


@dataclass
class MeasureReport:
    expression: str
    values: Dict[MeasureId, ExtReal] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"expression": self.expression,
                "values": {str(m): str(v) for m, v in self.values.items()}}


def measure_report(e: Set2D, expression: Optional[str] = None,
                   measures: Sequence[MeasureId] = (PI, RHO, XI, ETA)) -> MeasureReport:
    report = MeasureReport(str(e) if expression is None else expression)
    for m in measures:
        report.values[m] = evaluate(m, e)
    return report
