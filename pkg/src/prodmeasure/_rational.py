"""Exact rational backend, chosen once at import.

``gmpy2.mpq`` (GMP, compiled) is used when available; otherwise the
pure-Python ``fractions.Fraction``.  Set ``PRODMEASURE_RATIONAL=fractions``
to force the fallback.  Both compare and hash equal to each other, so
callers may pass either type (or ints, or ``"p/q"`` strings).
"""

import os
from fractions import Fraction

BACKEND = "fractions"
Rational = Fraction

if os.environ.get("PRODMEASURE_RATIONAL", "gmpy2") != "fractions":
    try:
        from gmpy2 import mpq as Rational  # noqa: F811
        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on the environment
        pass

RATIONAL_TYPES = (Fraction, Rational)


def to_rational(x):
    """Exact conversion; floats are rejected."""
    if isinstance(x, float):
        raise TypeError(f"exact rational expected, got float {x!r}")
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return Rational(x)
