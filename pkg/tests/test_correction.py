from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from madhava.correction import closed_form, convergent, eval_correction, n_to_p, p_to_n
from madhava.polyalg import parse_ratfun

p = sympy.Symbol("p")


def sympy_convergent(k):
    """Continued fraction 1/(t + 4/(t + 16/(t + ...))) built bottom-up by sympy."""
    t = 2 * p + 2
    acc = t
    for j in range(k - 1, 0, -1):
        acc = t + sympy.Integer(2 * j) ** 2 / acc
    return sympy.cancel(1 / acc)


@pytest.mark.parametrize("k", range(1, 9))
def test_convergent_matches_sympy(k):
    ours = convergent(k).p_form
    for x in (3, 5, 7, 11, Fraction(1, 3)):
        want = sympy_convergent(k).subs(p, sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x)
        assert ours(x) == Fraction(int(want.p), int(want.q))


def test_convergent_examples():
    assert convergent(1).p_form == parse_ratfun("1/(2p+2)")
    assert convergent(3).p_form == parse_ratfun("(p^2+2p+5)/(2p^3+6p^2+16p+12)")
    assert convergent(4).p_form == parse_ratfun("(p^3+3p^2+16p+14)/(2p^4+8p^3+40p^2+64p+48)")
    with pytest.raises(ValueError):
        convergent(0)


def test_closed_form_examples():
    assert closed_form(2).n_form == parse_ratfun("n/(4n^2+1)", "n")
    assert closed_form(3).n_form == parse_ratfun("(n^2+1)/(n(4n^2+5))", "n")
    assert closed_form(5).p_form == parse_ratfun("(p^4+4p^3+35p^2+62p+94)/(2p^5+10p^4+80p^3+200p^2+368p+240)")
    for k in (0, 6):
        with pytest.raises(ValueError):
            closed_form(k)


@pytest.mark.parametrize("k", range(1, 6))
def test_convergent_equals_closed_form(k):
    assert convergent(k) == closed_form(k)


def test_eval_correction_examples():
    assert eval_correction(1, 5) == Fraction(1, 20)
    assert eval_correction(3, 5) == Fraction(26, 525)
    assert eval_correction(2, 1) == Fraction(1, 5)


@given(st.integers(1, 6), st.integers(1, 500))
def test_n_form_is_p_form_at_odd_p(k, n):
    term = convergent(k)
    assert term.at_n(n) == term.at_p(2 * n - 1)


@given(st.integers(1, 6))
def test_substitution_round_trip(k):
    f = convergent(k).p_form
    assert n_to_p(p_to_n(f)) == f
