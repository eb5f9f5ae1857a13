"""Correction terms as convergents of the tail continued fraction.

The tail of the alternating odd-reciprocal series after the term ``1/p`` is

    C(p) = 1/(t + 2^2/(t + 4^2/(t + 6^2/(t + ...)))),   t = 2p + 2,

and the k-th convergent of it is the k-th order correction term ``f_k(p)``.
``F_k(n) = f_k(2n - 1)`` is the same term indexed by the number of series
terms instead of the last odd divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polyalg import Poly, RationalFunction, parse_ratfun

# t = 2p + 2
_T_IN_P = (2, 2)


@dataclass(frozen=True)
class CorrectionTerm:
    order: int
    p_form: RationalFunction
    n_form: RationalFunction

    def at_p(self, p) -> Fraction:
        return self.p_form(p)

    def at_n(self, n) -> Fraction:
        return self.n_form(n)


def p_to_n(f: RationalFunction) -> RationalFunction:
    """Substitute ``p <- 2n - 1``."""
    return f.compose_affine(2, -1)


def n_to_p(f: RationalFunction) -> RationalFunction:
    """Substitute ``n <- (p + 1)/2``."""
    return f.compose_affine(Fraction(1, 2), Fraction(1, 2))


def partial_numerator(j: int) -> int:
    return 1 if j == 1 else (2 * (j - 1)) ** 2


def convergent_in_t(k: int) -> tuple[Poly, Poly]:
    """Numerator and denominator of the k-th convergent as polynomials in t."""
    if k < 1:
        raise ValueError("convergent order must be at least 1")
    t = Poly.x()
    a_prev, a_cur = Poly.const(1), Poly.const(0)
    b_prev, b_cur = Poly.const(0), Poly.const(1)
    for j in range(1, k + 1):
        aj = partial_numerator(j)
        a_prev, a_cur = a_cur, t * a_cur + a_prev * aj
        b_prev, b_cur = b_cur, t * b_cur + b_prev * aj
    return a_cur, b_cur


@lru_cache(maxsize=None)
def convergent(k: int) -> CorrectionTerm:
    """The k-th order correction term, built from the convergent recurrence."""
    num_t, den_t = convergent_in_t(k)
    p_form = RationalFunction(num_t.compose_affine(*_T_IN_P), den_t.compose_affine(*_T_IN_P))
    return CorrectionTerm(k, p_form, p_to_n(p_form))


# Literal closed forms.  n-forms are given for the three classical terms;
# the higher ones are only known in p and are converted.
_CLOSED_P = {
    1: "1/(2p+2)",
    2: "(p+1)/(2p^2+4p+4)",
    3: "(p^2+2p+5)/(2p^3+6p^2+16p+12)",
    4: "(p^3+3p^2+16p+14)/(2p^4+8p^3+40p^2+64p+48)",
    5: "(p^4+4p^3+35p^2+62p+94)/(2p^5+10p^4+80p^3+200p^2+368p+240)",
}
_CLOSED_N = {
    1: "1/(4n)",
    2: "n/(4n^2+1)",
    3: "(n^2+1)/(n(4n^2+5))",
}


def closed_form(k: int) -> CorrectionTerm:
    """Stored closed-form correction terms for orders 1..5."""
    if k not in _CLOSED_P:
        raise ValueError(f"closed forms exist for orders 1..5, not {k}")
    p_form = parse_ratfun(_CLOSED_P[k], "p")
    n_form = parse_ratfun(_CLOSED_N[k], "n") if k in _CLOSED_N else p_to_n(p_form)
    return CorrectionTerm(k, p_form, n_form)


def eval_correction(k: int, n: int) -> Fraction:
    """Exact ``F_k(n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return convergent(k).n_form(n)
