from fractions import Fraction
import random

import pytest

from ttow import QQ, PrimeField
from ttow.errors import DivisionByZero, ValidationError
from ttow.fields import field_from_json


def test_rational_basics():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert QQ.parse("-7/3") == Fraction(-7, 3)
    assert QQ.fmt(Fraction(5, 4)) == "5/4"
    assert QQ.from_int(-2) == Fraction(-2)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(0) == 0
    assert F.pow(3, 6) == 1
    for a in range(1, 7):
        assert F.mul(a, F.inv(a)) == F.one


def test_prime_field_rejects_composite():
    with pytest.raises(ValidationError):
        PrimeField(6)
    with pytest.raises(ValidationError):
        PrimeField(1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QQ.inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        PrimeField(5).inv(0)


def test_field_json_round_trip():
    for field in (QQ, PrimeField(101)):
        assert field_from_json(field.to_json()) == field


def test_random_nonzero_is_nonzero():
    rng = random.Random(0)
    F = PrimeField(5)
    for _ in range(50):
        assert F.random_nonzero(rng) != 0
        assert QQ.random_nonzero(rng) != 0
