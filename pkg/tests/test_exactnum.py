from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from madhava.exactnum import (
    CEIL,
    FLOOR,
    HALF_EVEN,
    FixedDecimal,
    div_round,
    fixed_sqrt,
    int_isqrt,
    rat_arith,
    rat_to_fixed,
)

rationals = st.fractions(max_denominator=10**6)


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 4), Fraction(1, 8), "add") == Fraction(3, 8)
    assert rat_arith(Fraction(3, 8), Fraction(1, 3), "sub") == Fraction(1, 24)
    q = rat_arith(97, 452, "div")
    assert (q.numerator, q.denominator) == (97, 452)


def test_rat_arith_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")


def test_rat_arith_unknown_op():
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


@given(rationals, rationals)
def test_rat_arith_field_laws(a, b):
    assert rat_arith(rat_arith(a, b, "add"), b, "sub") == a
    if b:
        assert rat_arith(rat_arith(a, b, "mul"), b, "div") == a


def test_rat_to_fixed_examples():
    third = rat_to_fixed(Fraction(1, 3), 5, HALF_EVEN)
    assert (third.mantissa, third.scale) == (33333, 5)
    assert rat_to_fixed(Fraction(1, 3), 5, CEIL).mantissa == 33334
    assert rat_to_fixed(Fraction(1, 3), 5, FLOOR).mantissa == 33333
    assert str(rat_to_fixed(Fraction(104, 525), 15)) == "0.198095238095238"


@pytest.mark.parametrize("num,den,expected", [(5, 2, 2), (7, 2, 4), (-5, 2, -2), (-7, 2, -4), (1, 3, 0), (2, 3, 1)])
def test_div_round_half_even(num, den, expected):
    assert div_round(num, den, HALF_EVEN) == expected


@given(rationals, st.integers(0, 30))
def test_rounding_modes_bracket_value(q, scale):
    lo = rat_to_fixed(q, scale, FLOOR).to_fraction()
    hi = rat_to_fixed(q, scale, CEIL).to_fraction()
    mid = rat_to_fixed(q, scale, HALF_EVEN).to_fraction()
    ulp = Fraction(1, 10**scale)
    assert lo <= q <= hi and hi - lo <= ulp
    assert abs(mid - q) <= ulp / 2


def test_fixed_decimal_rendering():
    assert str(FixedDecimal(-5, 3)) == "-0.005"
    assert str(FixedDecimal(31415, 4)) == "3.1415"
    assert str(FixedDecimal(7, 0)) == "7"
    assert FixedDecimal(99753035, 9).to_scientific(8) == "+9.9753035e-02"


def test_fixed_decimal_scale_mismatch():
    with pytest.raises(ValueError):
        FixedDecimal(1, 2) + FixedDecimal(1, 3)


@given(st.integers(-10**12, 10**12), st.integers(0, 12), st.integers(0, 12))
def test_rescale_matches_exact_rounding(m, s, t):
    x = FixedDecimal(m, s)
    assert x.rescale(t, HALF_EVEN) == rat_to_fixed(x.to_fraction(), t, HALF_EVEN)


def test_int_isqrt_examples():
    assert int_isqrt(0) == 0
    assert int_isqrt(120000) == 346
    r = int_isqrt(12 * 10**30)
    assert len(str(r)) == 16 and r * r <= 12 * 10**30 < (r + 1) ** 2
    with pytest.raises(ValueError):
        int_isqrt(-1)


@given(st.integers(0, 10**40))
def test_int_isqrt_brackets(x):
    r = int_isqrt(x)
    assert r * r <= x < (r + 1) ** 2


def test_fixed_sqrt_examples():
    assert str(fixed_sqrt(4, 10)) == "2.0000000000"
    assert str(fixed_sqrt(12, 12)) == "3.464101615137"
    assert str(fixed_sqrt(12, 0)) == "3"
    with pytest.raises(ValueError):
        fixed_sqrt(-12, 3)


def test_log10_abs():
    assert FixedDecimal(1, 4).log10_abs() == pytest.approx(-4)
    assert FixedDecimal(-2500, 2).log10_abs() == pytest.approx(1.39794, abs=1e-5)
