from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from madhava import hayashi
from madhava.correction import convergent
from madhava.polyalg import Poly, RationalFunction
from madhava.published import HAYASHI_355_113, HAYASHI_62832_20000

MILU = Fraction(355, 113)
HAYASHI_PI = Fraction(62832, 20000)


def test_s_of_n_examples():
    assert hayashi.s_of_n(MILU, 1) == Fraction(97, 452)
    assert hayashi.s_of_n(MILU, 5) == Fraction(21153, 427140)
    assert hayashi.s_of_n(HAYASHI_PI, 1) == Fraction(1073, 5000)
    for n, text in enumerate(HAYASHI_355_113["S"], start=1):
        assert hayashi.s_of_n(MILU, n) == Fraction(text)
    for n, text in enumerate(HAYASHI_62832_20000["S"], start=1):
        assert hayashi.s_of_n(HAYASHI_PI, n) == Fraction(text)


def test_peel_examples():
    assert hayashi.peel(Fraction(97, 452)) == hayashi.PeelLayer(4, Fraction(64, 97))
    assert hayashi.peel(Fraction(64, 97)) == hayashi.PeelLayer(1, Fraction(33, 64))
    assert hayashi.peel(Fraction(4080, 21153)) == hayashi.PeelLayer(5, Fraction(753, 4080))
    for bad in (0, 1, Fraction(3, 2), Fraction(-1, 2)):
        with pytest.raises(ValueError):
            hayashi.peel(bad)


@given(st.fractions(min_value=0, max_value=1, max_denominator=10**6).filter(lambda q: 0 < q < 1))
def test_peel_invariant(q):
    layer = hayashi.peel(q)
    assert q == 1 / (layer.quotient + layer.remainder)
    assert 0 <= layer.remainder < 1


@given(st.fractions(min_value=0, max_value=1, max_denominator=10**5).filter(lambda q: 0 < q < 1))
def test_peel_all_rebuilds(q):
    layers = hayashi.peel_all(q)
    acc = Fraction(0)
    for layer in reversed(layers):
        acc = 1 / (layer.quotient + acc)
    assert acc == q


def test_published_quotients_and_remainders():
    for col, s in enumerate(HAYASHI_355_113["S"]):
        layers = hayashi.peel_all(Fraction(s), 3)
        for level, layer in enumerate(layers):
            assert layer.quotient == HAYASHI_355_113["quotients"][level][col]
            assert layer.remainder == Fraction(HAYASHI_355_113["remainders"][level][col])
    for col, s in enumerate(HAYASHI_62832_20000["S"]):
        layers = hayashi.peel_all(Fraction(s), 3)
        assert [l.quotient for l in layers] == [row[col] for row in HAYASHI_62832_20000["quotients"]]
        assert layers[-1].remainder == Fraction(HAYASHI_62832_20000["final_remainders"][col])


def test_reconstruct_milu():
    rep = hayashi.reconstruct(MILU, 5, 3)
    assert [p.render() for p in rep.patterns] == ["4n", "n", "n"]
    assert rep.anomalies == ()
    assert rep.implied[2].render("n") == "(n^2+1)/(4n^3+5n)"
    for d in range(3):
        assert rep.implied[d] == convergent(d + 1).n_form


def test_reconstruct_depth_one():
    rep = hayashi.reconstruct(MILU, 5, 1)
    assert rep.patterns[0].render() == "4n"
    assert rep.implied == (convergent(1).n_form,)


def test_reconstruct_anomaly():
    rep = hayashi.reconstruct(HAYASHI_PI, 5, 3)
    assert [p.render() for p in rep.patterns] == ["4n", "n", "n"]
    assert rep.anomalies == ((3, 5, 6),)


def test_reconstruct_argument_errors():
    with pytest.raises(ValueError):
        hayashi.reconstruct(0, 5, 3)
    with pytest.raises(ValueError):
        hayashi.reconstruct(MILU, 2, 3)


def test_fit_linear_rejects_scatter():
    pattern, _ = hayashi.fit_linear([1, 2, 3, 4, 5], [1, 7, 2, 9, 4])
    assert pattern is None
    pattern, off = hayashi.fit_linear([1, 2, 3, 4, 5], [3, 5, 7, 100, 11])
    assert (pattern.slope, pattern.intercept, off) == (2, 1, [4])


def test_mediant_examples():
    n = Poly.x()
    got = hayashi.mediant((1, n * 4), (n * n, n * (n * n * 4 + 1)))
    assert got == RationalFunction(n * n + 1, n * (n * n * 4 + 5))
    assert got == convergent(3).n_form
    assert hayashi.mediant((1, 2), (1, 3)) == Fraction(2, 5)
    assert hayashi.mediant((0, 1), (1, 1)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        hayashi.mediant((1, 1), (1, -1))


@given(st.integers(0, 50), st.integers(1, 50), st.integers(0, 50), st.integers(1, 50))
def test_mediant_lies_between(a, b, c, d):
    lo, hi = sorted((Fraction(a, b), Fraction(c, d)))
    assert lo <= hayashi.mediant((a, b), (c, d)) <= hi
