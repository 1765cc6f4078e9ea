"""Exact parameter-polynomial ring."""

from fractions import Fraction

import pytest

from wqsym.params import ParamPoly

x = ParamPoly.var("x")
y = ParamPoly.var("y")
t = ParamPoly.var("t")


def test_canonical_equality():
    assert x * (x + 1) == x * x + x
    assert (x + y) * (x - y) == x * x - y * y
    assert x - x == ParamPoly.const(0)
    assert not (x - x)


def test_scalar_mixing():
    assert 2 * x + x == 3 * x
    assert Fraction(1, 2) * (x + x) == x
    assert x * 0 == ParamPoly.const(0)
    assert ParamPoly.const(Fraction(3, 4)) == Fraction(3, 4)
    assert Fraction(3, 4) == ParamPoly.const(Fraction(3, 4))


def test_powers():
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert t ** 0 == 1
    with pytest.raises(ValueError):
        x ** -1


def test_substitute():
    p = x * x + x * y + y * y
    assert p.substitute({"x": 1, "y": 1}) == 3
    assert p.substitute({"x": Fraction(1, 2)}) == Fraction(1, 4) + Fraction(1, 2) * y + y * y


def test_str_forms():
    assert str(x * x + x * y + y * y) == "x*y+x^2+y^2"
    assert str(ParamPoly.const(0)) == "0"
    assert str(2 * t) == "2*t"
    assert str(-t) == "-t"
    assert str(t - 1) == "-1+t"


def test_rejects_floats():
    with pytest.raises(TypeError):
        ParamPoly.const(0.5)
