from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from prodmeasure import INF, ZERO, ExtReal, Finite, ext_add, ext_mul, ext_sum, parse_extreal
from prodmeasure._rational import Rational, to_rational

from strategies import nonneg_rationals

extreals = st.one_of(st.just(INF), nonneg_rationals.map(Finite))


def test_add_examples():
    assert ext_add(Finite(Rational(1, 2)), Finite(Rational(1, 3))) == Finite(Rational(5, 6))
    assert ext_add(INF, Finite(0)) == INF
    assert ext_add(Finite(0), Finite(1)) == Finite(1)


def test_mul_examples():
    assert ext_mul(INF, Finite(0)) == Finite(0)
    assert ext_mul(Finite(0), INF) == Finite(0)
    assert ext_mul(INF, Finite(2)) == INF
    assert ext_mul(Finite(Rational(3, 2)), Finite(Rational(2, 3))) == Finite(1)


def test_sum_examples():
    assert ext_sum([]) == Finite(0)
    assert ext_sum([Finite(Rational(1, 4)), Finite(Rational(3, 4))]) == Finite(1)
    assert ext_sum([Finite(1), INF, Finite(2)]) == INF


def test_operators_and_order():
    assert Finite(1) + Finite(2) == Finite(3)
    assert Finite(2) * INF == INF
    assert ZERO < Finite(Rational(1, 100)) < INF
    assert not INF < INF
    assert INF <= INF


def test_negative_rejected():
    with pytest.raises(ValueError):
        Finite(-1)


def test_float_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)


@pytest.mark.parametrize("value, text", [
    (INF, "inf"), (Finite(3), "3"), (Finite(Rational(7, 2)), "7/2"), (ZERO, "0"),
])
def test_serialization(value, text):
    assert str(value) == text
    assert parse_extreal(text) == value


def test_fraction_inputs_compare_equal():
    assert Finite(Fraction(1, 2)) == Finite(Rational(1, 2))


@given(extreals, extreals)
def test_commutative(a, b):
    assert ext_add(a, b) == ext_add(b, a)
    assert ext_mul(a, b) == ext_mul(b, a)


@given(extreals, extreals, extreals)
def test_associative(a, b, c):
    assert ext_add(ext_add(a, b), c) == ext_add(a, ext_add(b, c))
    assert ext_mul(ext_mul(a, b), c) == ext_mul(a, ext_mul(b, c))


@given(extreals, extreals, extreals)
def test_distributive(a, b, c):
    assert ext_mul(a, ext_add(b, c)) == ext_add(ext_mul(a, b), ext_mul(a, c))


@given(extreals, extreals)
def test_never_negative(a, b):
    for r in (ext_add(a, b), ext_mul(a, b)):
        assert r.is_infinite or r.value >= 0


@given(extreals)
def test_roundtrip(a):
    assert parse_extreal(str(a)) == a
