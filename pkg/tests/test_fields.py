from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bincurve.fields import (PrimeField, Rationals, field_from_json,
                             field_to_json)


def test_prime_field_rejects_composites_and_tiny_primes():
    # p = 2, 3 are rejected too: several constructions need >= 6 points on
    # the line and derivative rows degenerate in tiny characteristic
    for n in (0, 1, 2, 3, 4, 6, 9, 15, 21):
        with pytest.raises(ValueError):
            PrimeField(n)
    for p in (5, 7, 11, 13, 23, 97):
        assert PrimeField(p).p == p


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_f7_matches_int_arithmetic(a, b):
    F = PrimeField(7)
    x, y = F.from_int(a), F.from_int(b)
    assert F.add(x, y) == (a + b) % 7
    assert F.sub(x, y) == (a - b) % 7
    assert F.mul(x, y) == (a * b) % 7
    assert F.neg(x) == (-a) % 7


def test_inverse_and_division():
    F = PrimeField(11)
    for a in range(1, 11):
        assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    assert F.div(F.from_int(3), F.from_int(4)) == (3 * pow(4, -1, 11)) % 11


def test_pow_negative_exponent():
    F = PrimeField(13)
    assert F.pow(2, -1) == pow(2, -1, 13)
    assert F.pow(5, -3) == pow(5, -3, 13)
    assert F.pow(5, 0) == 1
    Q = Rationals()
    assert Q.pow(Fraction(2, 3), -2) == Fraction(9, 4)


def test_units_enumeration():
    F = PrimeField(5)
    assert list(F.units()) == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        list(Rationals().units())


def test_parse_fmt_round_trip():
    F = PrimeField(7)
    for a in range(7):
        assert F.parse(F.fmt(a)) == a
    Q = Rationals()
    for s in ("3", "-2", "5/3", "-7/4", "0"):
        assert Q.fmt(Q.parse(s)) == s


def test_pair_round_trip():
    F = PrimeField(7)
    assert F.to_pair(3) == ("3", "1")
    assert F.from_pair(("3", "1")) == 3
    Q = Rationals()
    v = Fraction(-5, 3)
    assert Q.from_pair(Q.to_pair(v)) == v


def test_rationals_exact():
    Q = Rationals()
    a = Q.div(Q.one, Q.from_int(3))
    assert Q.mul(a, Q.from_int(3)) == Q.one
    assert Q.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)


def test_field_json_round_trip():
    for ctx in (PrimeField(7), PrimeField(23), Rationals()):
        assert field_from_json(field_to_json(ctx)) == ctx
    assert field_to_json(PrimeField(7)) == {"type": "Fp", "p": 7}
    assert field_to_json(Rationals()) == {"type": "Q"}


def test_context_equality_and_hash():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert Rationals() == Rationals()
    assert hash(PrimeField(7)) == hash(PrimeField(7))
    assert PrimeField(7) != Rationals()
