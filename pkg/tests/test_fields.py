from fractions import Fraction

import pytest

from hopfqg.fields import QQ, FieldError, PrimeField, field_from_tag


def test_rational_parse_lowest_terms():
    x = QQ.parse("2/4")
    assert x == Fraction(1, 2)
    assert x.denominator == 2 and x.numerator == 1


def test_rational_format_omits_unit_denominator():
    assert QQ.format(Fraction(3)) == "3"
    assert QQ.format(Fraction(-5, 3)) == "-5/3"


def test_rational_rejects_floats_and_zero_denominator():
    with pytest.raises(FieldError):
        QQ.parse("1.5")
    with pytest.raises(FieldError):
        QQ.parse("1/0")


def test_rational_arithmetic_stays_reduced():
    x = QQ.div(Fraction(6), Fraction(-4))
    assert (x.numerator, x.denominator) == (-3, 2)
    assert x.denominator > 0


def test_prime_field_arithmetic():
    f5 = PrimeField(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.div(1, 3) == 2  # 3*2 = 6 = 1 mod 5
    assert f5.neg(1) == 4
    assert f5.parse("-1") == 4


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(6)


def test_field_tags_round_trip():
    assert field_from_tag("Q") == QQ
    assert field_from_tag("GF:7") == PrimeField(7)
    assert field_from_tag("GF:7").tag == "GF:7"
    with pytest.raises(FieldError):
        field_from_tag("GF:10")
    with pytest.raises(FieldError):
        field_from_tag("R")


def test_division_by_zero_raises():
    with pytest.raises(FieldError):
        QQ.div(QQ.one(), QQ.zero())
    with pytest.raises(FieldError):
        PrimeField(3).div(1, 3)
