"""Nonnegative extended reals ``[0, inf]`` with exact rational payloads.

Products follow the measure-theoretic convention ``0 * inf = inf * 0 = 0``.
There is deliberately no subtraction, so ``inf - inf`` cannot arise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Iterable, Optional

from ._rational import Rational, to_rational


@total_ordering
@dataclass(frozen=True)
class ExtReal:
    """A value in ``[0, inf]``; ``value is None`` encodes infinity."""

    value: Optional[Rational] = None

    def __post_init__(self):
        if self.value is not None:
            v = to_rational(self.value)
            if v < 0:
                raise ValueError(f"negative extended real: {v}")
            object.__setattr__(self, "value", v)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __add__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        return ext_add(self, other)

    def __mul__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        return ext_mul(self, other)

    def __str__(self):
        if self.value is None:
            return "inf"
        return format_rational(self.value)

    def __repr__(self):
        return "INF" if self.value is None else f"Finite({self})"


INF = ExtReal(None)
ZERO = ExtReal(0)
ONE = ExtReal(1)


def Finite(x) -> ExtReal:
    return ExtReal(x)


def ext_add(a: ExtReal, b: ExtReal) -> ExtReal:
    if a.value is None or b.value is None:
        return INF
    return ExtReal(a.value + b.value)


def ext_mul(a: ExtReal, b: ExtReal) -> ExtReal:
    # 0 * inf = 0 in either order
    if a.value == 0 or b.value == 0:
        return ZERO
    if a.value is None or b.value is None:
        return INF
    return ExtReal(a.value * b.value)


def ext_sum(values: Iterable[ExtReal]) -> ExtReal:
    return reduce(ext_add, values, ZERO)


def format_rational(q) -> str:
    """Render ``q`` as ``"p/q"``, or ``"n"`` when the denominator is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_extreal(text: str) -> ExtReal:
    """Inverse of ``str``: accepts ``"inf"``, ``"n"`` or ``"p/q"``."""
    text = text.strip()
    if text == "inf":
        return INF
    return ExtReal(Fraction(text))  # Fraction parses signs and spaces strictly
