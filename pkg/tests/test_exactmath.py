from __future__ import annotations

import pytest
from conftest import base_numbers, scalars
from hypothesis import given

from supergca.exactmath import (
    BaseNumber,
    CyclicAssignment,
    DivergentLimit,
    Scalar,
    UnknownParameter,
    param,
)

S = Scalar.parse


def test_gaussian_norm():
    assert S("(1 + i) * (1 - i)") == Scalar.const(2)


def test_sqrt2_squared():
    assert S("sqrt2 * sqrt2") == Scalar.const(2)
    assert BaseNumber.parse("i") * BaseNumber.parse("i") == BaseNumber(-1)


def test_additive_inverse_with_u():
    x = param("alpha").times_upow(1)
    assert (x + (-x)).is_zero()
    assert Scalar().terms == {}


def test_substitute_examples():
    assert S("alpha*beta - 1").substitute({"alpha": 1, "beta": 1}).is_zero()
    assert S("-(1 + alpha) - 1").substitute({"alpha": -2}).is_zero()
    assert S("gamma*u^2").substitute({"gamma": 2}) == S("2*u^2")


def test_substitute_rejects_cycles():
    with pytest.raises(CyclicAssignment):
        S("alpha").substitute({"alpha": S("beta"), "beta": S("alpha")})


def test_limit_examples():
    assert S("3 + 5*u^-2").limit_at_infinity() == Scalar.const(3)
    assert S("i*u^-1 + alpha").limit_at_infinity() == param("alpha")
    with pytest.raises(DivergentLimit) as err:
        Scalar.upow(1).limit_at_infinity()
    assert err.value.offenders == ["u"]


def test_conjugate_examples():
    assert S("1 + i").conjugate() == S("1 - i")
    assert S("sqrt2*alpha").conjugate() == S("sqrt2*alpha")


def test_unknown_parameter():
    with pytest.raises(UnknownParameter):
        Scalar.param("not_registered_anywhere")


def test_sqrt_in_field():
    assert BaseNumber(2).sqrt() * BaseNumber(2).sqrt() == BaseNumber(2)
    assert BaseNumber(-1).sqrt() ** 2 == BaseNumber(-1)
    assert BaseNumber(3).sqrt() is None


@given(base_numbers(), base_numbers(), base_numbers())
def test_field_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == BaseNumber(1)


@given(base_numbers())
def test_equality_is_coordinatewise(x):
    assert x == BaseNumber(*x.c)
    assert hash(x) == hash(BaseNumber(*x.c))
    assert BaseNumber.parse(x.render()) == x


@given(scalars(), scalars())
def test_scalar_ring(x, y):
    assert x + y == y + x
    assert x * y == y * x
    assert (x - x).is_zero()
    assert (x + y) * x == x * x + y * x


@given(scalars())
def test_conjugate_is_involution(x):
    assert x.conjugate().conjugate() == x


@given(scalars())
def test_render_parse_roundtrip(x):
    assert Scalar.parse(x.render()) == x


@given(scalars())
def test_limit_keeps_u0_part(x):
    if max(x.u_powers(), default=0) > 0:
        with pytest.raises(DivergentLimit):
            x.limit_at_infinity()
    else:
        assert x.limit_at_infinity() == x.u_coefficient(0)
