from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfmoments.exactnum import (
    DomainError,
    FieldMismatchError,
    QuadField,
    decimal_string,
    parse_rational,
    rational_sqrt,
    sign_of,
)

RADICANDS = [F(2), F(5), F(7), F(45), F(252), F(64, 9)]

parts = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def field_elements(draw, count=1):
    fld = QuadField(draw(st.sampled_from(RADICANDS)))
    return tuple(fld.element(draw(parts), draw(parts)) for _ in range(count))


def test_field_detects_perfect_squares():
    assert not QuadField(5).is_degenerate
    fld = QuadField(F(64, 9))
    assert fld.is_degenerate
    assert fld.root == F(8, 3)
    assert QuadField(0).is_degenerate


def test_negative_radicand_rejected():
    with pytest.raises(DomainError):
        QuadField(-1)


def test_rational_sqrt():
    assert rational_sqrt(F(64, 9)) == F(8, 3)
    assert rational_sqrt(F(4)) == 2
    assert rational_sqrt(F(5)) is None
    assert rational_sqrt(F(-4)) is None


def test_degenerate_elements_fold():
    fld = QuadField(F(64, 9))
    x = fld.element(1, F(3, 8))
    assert x.surd == 0
    assert x == 2


def test_conjugate_product():
    fld = QuadField(5)
    left = fld.element(1, 1)
    right = fld.element(1, -1)
    assert left * right == -4


def test_contraction_and_inverse_multiply_to_one():
    # the two roots of x^2 - 3x + 1 multiply to 1
    fld = QuadField(5)
    small = fld.element(F(3, 2), F(-1, 2))
    large = fld.element(F(3, 2), F(1, 2))
    assert small * large == 1
    assert small.inverse() == large


def test_division_by_zero():
    fld = QuadField(5)
    with pytest.raises(ZeroDivisionError):
        fld.one / fld.zero


def test_sqrt_embedding():
    fld = QuadField(252)
    assert fld.sqrt(7) == fld.element(0, F(1, 6))
    assert fld.sqrt(4) == 2
    with pytest.raises(DomainError):
        fld.sqrt(5)
    with pytest.raises(DomainError):
        fld.sqrt(-1)


def test_sign_examples():
    fld = QuadField(5)
    assert fld.element(-2, 1).sign() == 1
    small_root = fld.element(F(3, 2), F(-1, 2))  # (3 - sqrt(5))/2 < 1
    assert (small_root - 1).sign() == -1
    assert fld.zero.sign() == 0


def test_decimal_examples():
    fld = QuadField(5)
    golden = fld.element(F(-1, 2), F(1, 2))
    assert golden.decimal(6) == "0.618034"
    assert decimal_string(F(1, 3), 4) == "0.3333"
    fld252 = QuadField(252)
    euler = fld252.element(F(-7, 2), F(1, 4))
    assert euler.decimal(6) == "0.468627"
    assert (-golden).decimal(3) == "-0.618"


def test_decimal_rounds_half_to_even_on_rationals():
    assert decimal_string(F(1, 8), 2) == "0.12"
    assert decimal_string(F(3, 8), 2) == "0.38"
    assert decimal_string(F(1, 4), 1) == "0.2"
    assert decimal_string(F(3, 4), 1) == "0.8"
    assert decimal_string(F(-1, 4), 1) == "-0.2"


def test_parse_rational():
    assert parse_rational("7/2") == F(7, 2)
    assert parse_rational("2") == 2
    assert parse_rational("0.5") == F(1, 2)
    with pytest.raises(DomainError):
        parse_rational("one half")
    with pytest.raises(DomainError):
        parse_rational("1/0")


def test_mixed_fields_do_not_combine():
    a = QuadField(5).element(1, 1)
    b = QuadField(7).element(1, 1)
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a == b
    # rational-valued elements compare fine across fields
    assert QuadField(5).element(3) == QuadField(7).element(3)


def test_string_form():
    fld = QuadField(5)
    assert str(fld.element(F(3, 2), F(-1, 2))) == "3/2 - 1/2*sqrt(5)"
    assert str(fld.element(0, F(1, 6))) == "1/6*sqrt(5)"
    assert str(fld.element(F(2, 3))) == "2/3"


@given(field_elements(count=3))
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(field_elements(count=1))
def test_inverse_roundtrip(xs):
    (x,) = xs
    if x.sign() == 0:
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == 1
        assert x / x == 1


@given(field_elements(count=2))
def test_sign_is_multiplicative(xy):
    x, y = xy
    assert (x * y).sign() == x.sign() * y.sign()


@given(field_elements(count=1))
@settings(max_examples=60)
def test_sign_agrees_with_decimal(xs):
    (x,) = xs
    s = x.sign()
    digits = 6
    while True:
        value = F(x.decimal(digits))
        if value != 0 or s == 0:
            break
        digits += 12
        assert digits < 200, "decimal refused to reveal a nonzero value"
    assert sign_of(value) == s


@given(field_elements(count=1), st.integers(min_value=-3, max_value=5),
       st.integers(min_value=-3, max_value=5))
def test_power_laws(xs, m, n):
    (x,) = xs
    if x.sign() == 0 and (m < 0 or n < 0):
        return
    assert x ** (m + n) == x**m * x**n


@given(field_elements(count=2))
def test_order_consistent_with_sign(xy):
    x, y = xy
    assert (x < y) == ((x - y).sign() < 0)
    assert (x > y) == ((x - y).sign() > 0)
    assert (x == y) == ((x - y).sign() == 0)


@given(field_elements(count=1))
def test_rational_valued_elements_hash_like_fractions(xs):
    (x,) = xs
    if x.is_rational:
        assert x == x.rat
        assert hash(x) == hash(x.rat)
        assert x.as_fraction() == x.rat
    else:
        with pytest.raises(DomainError):
            x.as_fraction()


@given(field_elements(count=1))
def test_decimal_agrees_with_enclosure_width(xs):
    # successive renderings only append digits consistently
    (x,) = xs
    short = x.decimal(4)
    long = x.decimal(9)
    assert abs(F(short) - F(long)) <= F(1, 10**4)
