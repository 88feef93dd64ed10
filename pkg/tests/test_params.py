"""Symbolic affine-linear parameter expressions."""

from fractions import Fraction

import pytest

from feyngkz.params import ParamLinear


def test_construction_and_str():
    beta = ParamLinear.param("beta")
    a1 = ParamLinear.param("a1")
    expr = beta - a1 + ParamLinear.const(Fraction(3, 2))
    assert str(expr) == "beta - a1 + 3/2"


def test_arithmetic():
    a1 = ParamLinear.param("a1")
    a2 = ParamLinear.param("a2")
    expr = a1 + a2 - a1
    assert expr == a2
    assert (-expr) + a2 == ParamLinear.const(0)
    assert (a1 * 2 - a1 - a1).is_zero()


def test_scalar_multiplication_keeps_fractions():
    a1 = ParamLinear.param("a1")
    half = (a1 * Fraction(1, 2))
    assert str(half) == "1/2*a1"
    assert half + half == a1


def test_evaluate():
    beta = ParamLinear.param("beta")
    a1 = ParamLinear.param("a1")
    expr = beta * 2 - a1 + ParamLinear.const(1)
    assert expr.evaluate({"beta": 1.9, "a1": 0.3}) == pytest.approx(4.5)


def test_parse_round_trip():
    samples = [
        "beta - a1 - a2 + 3/2",
        "-beta + a2",
        "0",
        "1",
        "-a1",
        "1/2*a1 - 1/2*a2 + 1/2",
        "2*beta - 2*a1 - a2",
    ]
    for text in samples:
        assert str(ParamLinear.parse(text)) == text


def test_eq_and_hash():
    a = ParamLinear.param("a1") + ParamLinear.const(1)
    b = ParamLinear.const(1) + ParamLinear.param("a1")
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_is_nonpositive_integer():
    assert ParamLinear.const(0).is_nonpositive_integer()
    assert ParamLinear.const(-3).is_nonpositive_integer()
    assert not ParamLinear.const(Fraction(-1, 2)).is_nonpositive_integer()
    assert not ParamLinear.const(2).is_nonpositive_integer()
    assert not ParamLinear.param("a1").is_nonpositive_integer()
