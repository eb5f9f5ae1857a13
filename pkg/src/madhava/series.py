"""Catalogue and fixed-point evaluation of the pi series.

Terms are exact rationals (``term``); partial sums are accumulated as scaled
integers with exactly one half-even rounding per term, so the accumulated
rounding error is bounded by the number of roundings times half an ulp.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import kernels
from .correction import convergent, eval_correction
from .exactnum import HALF_EVEN, FixedDecimal, div_round, fixed_sqrt
from .polyalg import Poly, RationalFunction, parse_poly

# id -> (kernel kind, multiplier to reach pi, constant added before the terms)
_CATALOGUE = {
    "leibniz": (kernels.LEIBNIZ, 4, Fraction(0)),
    "leibniz_corrected": (kernels.LEIBNIZ, 4, Fraction(0)),
    "eq38": (kernels.EQ38, 4, Fraction(0)),
    "eq39": (kernels.EQ39, 4, Fraction(0)),
    "eq40": (kernels.EQ40, 4, Fraction(0)),
    "eq41": (kernels.EQ41, 4, Fraction(0)),
    "eq42a": (kernels.EQ42A, 8, Fraction(0)),
    "eq42b": (kernels.EQ42B, 8, Fraction(0)),
    "putumana": (kernels.PUTUMANA, 4, Fraction(3, 4)),
    "sqrt12": (kernels.SQRT12, None, Fraction(0)),
}
SERIES_IDS = tuple(_CATALOGUE)
DEFAULT_SCALE = 15


@dataclass(frozen=True)
class SeriesSpec:
    id: str
    term_count: int
    scale: int = DEFAULT_SCALE
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.id not in _CATALOGUE:
            raise ValueError(f"unknown series id {self.id!r}")
        if self.term_count < 1:
            raise ValueError("term_count must be at least 1")
        if self.scale < 1:
            raise ValueError("scale must be at least 1")
        if self.id == "leibniz_corrected":
            if self.k is None or not 1 <= self.k <= 5:
                raise ValueError("leibniz_corrected needs a correction order k in 1..5")
        elif self.k is not None:
            raise ValueError(f"series {self.id!r} takes no correction order")

    @property
    def multiplier(self) -> Optional[int]:
        return _CATALOGUE[self.id][1]


@dataclass(frozen=True)
class EvalResult:
    """Estimate of pi from a truncated series.

    ``working`` is the estimate at the working scale and ``rounding_bound``
    bounds ``|working - exact|`` (``exact`` being the exact partial sum
    mapped to pi).  ``value`` is ``working`` rounded half-even to the output
    scale, which adds at most half an output ulp.
    """

    value: FixedDecimal
    term_count: int
    rounding_bound: FixedDecimal
    working: FixedDecimal
    error: Optional[FixedDecimal] = None


def working_guard(term_count: int) -> int:
    """ceil(log10(term_count)) + 5."""
    return (len(str(term_count - 1)) if term_count > 1 else 0) + 5


def term(spec_id: str, j: int) -> Fraction:
    """Exact j-th term (1-based) in the series' own unit (pi/4, or pi/8 for eq42a/b)."""
    if j < 1:
        raise ValueError("term index must be at least 1")
    if spec_id in ("leibniz", "leibniz_corrected"):
        return Fraction((-1) ** (j - 1), 2 * j - 1)
    if spec_id == "eq38":
        if j == 1:
            return Fraction(3, 4)
        p = 2 * j - 1
        return Fraction((-1) ** j, p**3 - p)
    if spec_id == "eq39":
        p = 2 * j - 1
        return Fraction((-1) ** (j + 1) * 4, p**5 + 4 * p)
    if spec_id == "eq40":
        if j == 1:
            return Fraction(7, 9)
        p = 2 * j - 1
        return Fraction((-1) ** j * 36, (p - 1) * p * (p + 1) * ((p * p + 4) ** 2 + 20))
    if spec_id == "eq41":
        if j == 1:
            return Fraction(1, 2)
        return Fraction((-1) ** j, (2 * j - 2) ** 2 - 1)
    if spec_id == "eq42a":
        return Fraction(1, (4 * j - 2) ** 2 - 1)
    if spec_id == "eq42b":
        if j == 1:
            return Fraction(1, 2)
        return Fraction(-1, (4 * j - 4) ** 2 - 1)
    if spec_id == "putumana":
        e = 2 * j
        return Fraction(3, 2) / ((2 * e * e - 1) ** 2 - e * e)
    if spec_id == "sqrt12":
        raise ValueError("sqrt12 terms carry an irrational factor; use partial_sum")
    raise ValueError(f"unknown series id {spec_id!r}")


def leading_constant(spec_id: str) -> Fraction:
    return _CATALOGUE[spec_id][2]


def exact_partial_sum(spec_id: str, n: int, k: Optional[int] = None) -> Fraction:
    """Exact rational partial sum in the series' own unit (test oracle; small n only)."""
    total = leading_constant(spec_id) + sum((term(spec_id, j) for j in range(1, n + 1)), Fraction(0))
    if spec_id == "leibniz_corrected":
        total += (-1) ** n * eval_correction(k, n)
    return total


def corrected_partial_sum(f: RationalFunction, n: int) -> Fraction:
    """Exact ``sum_{j<=n} (-1)^(j-1)/(2j-1) + (-1)^n f(2n-1)`` for any correction f(p)."""
    s = sum((Fraction((-1) ** (j - 1), 2 * j - 1) for j in range(1, n + 1)), Fraction(0))
    return s + (-1) ** n * f(2 * n - 1)


def _sqrt12_working(n: int, scale: int) -> tuple[int, int]:
    """Mantissa at ``scale`` of sqrt(12)*sum_{j<n} (-1)^j/((2j+1)3^j), and half-ulp count bound."""
    inner = scale + 1
    s = kernels.block_sum(kernels.SQRT12, 1, n + 1, 10**inner)
    r = fixed_sqrt(12, inner).mantissa
    mant = div_round(s * r, 10 ** (inner + 1))
    # |err| <= sqrt(12)/2 * n + 1.01 ulps at `inner`, then half an ulp at `scale`
    bound = Fraction(17321, 10000) * n + Fraction(101, 100)
    half_ulps = math.ceil(bound * 2 / 10) + 1
    return mant, half_ulps


def partial_sum(spec: SeriesSpec, with_error: bool = False) -> EvalResult:
    n = spec.term_count
    work = spec.scale + working_guard(n)
    kind, mult, lead = _CATALOGUE[spec.id]
    if spec.id == "sqrt12":
        mant, half_ulps = _sqrt12_working(n, work)
    else:
        unit = mult * 10**work
        mant = kernels.block_sum(kind, 1, n + 1, unit)
        half_ulps = n
        # leading constant and truncation correction share one rounding
        extra = Fraction(lead) if lead else Fraction(0)
        if spec.id == "leibniz_corrected":
            extra += (-1) ** n * eval_correction(spec.k, n)
        if extra:
            mant += div_round(unit * extra.numerator, extra.denominator)
            half_ulps += 1
    working = FixedDecimal(mant, work)
    bound = FixedDecimal(5 * half_ulps, work + 1)
    err = None
    if with_error:
        err = working - reference_pi(work)
    return EvalResult(working.rescale(spec.scale, HALF_EVEN), n, bound, working, err)


def sqrt12_terms_for(scale: int) -> int:
    """Fewest terms m with sqrt(12)/((2m+1)*3^m) < 10^-(scale+2)."""
    m = 1
    # sqrt(12) < 3.47
    while 347 * 10 ** (scale + 2) >= 100 * (2 * m + 1) * 3**m:
        m += 1
    return m


@lru_cache(maxsize=64)
def reference_pi(scale: int) -> FixedDecimal:
    """pi correctly rounded (half-even) to ``scale`` decimals, from the sqrt(12) series.

    Precision is raised until the whole error interval of the working value
    rounds to the same result.
    """
    if scale < 1:
        raise ValueError("scale must be at least 1")
    extra = 4
    while True:
        target = scale + extra
        m = sqrt12_terms_for(target)
        work = target + len(str(m))
        mant, half_ulps = _sqrt12_working(m, work)
        # rounding error plus the alternating tail (< 10^-(target+2))
        err = Fraction(half_ulps, 2 * 10**work) + Fraction(1, 10 ** (target + 2))
        mid = Fraction(mant, 10**work)
        lo = FixedDecimal.from_rational(mid - err, scale, HALF_EVEN)
        if lo == FixedDecimal.from_rational(mid + err, scale, HALF_EVEN):
            return lo
        extra += 4


# -- tables and figure data ------------------------------------------------------

@dataclass(frozen=True)
class ErrorRow:
    n: int
    errors: tuple[FixedDecimal, ...]  # E, E1, E2, E3 at the working scale


def error_table(n_values: Sequence[int], scale: int = 40, orders: Sequence[int] = (1, 2, 3)) -> list[ErrorRow]:
    """E(n) = pi - 4*s_n and E_k(n) = pi - 4*(s_n + (-1)^n F_k(n)) for each n."""
    if any(n < 1 for n in n_values):
        raise ValueError("n values must be positive")
    ordered = sorted(set(n_values))
    work = scale + 6 + working_guard(max(ordered))
    unit = 4 * 10**work
    pi = reference_pi(work + 2).rescale(work, HALF_EVEN)
    partial = {}
    acc, last = 0, 0
    for n in ordered:
        acc += kernels.block_sum(kernels.LEIBNIZ, last + 1, n + 1, unit)
        last = n
        partial[n] = acc
    rows = []
    for n in n_values:
        s = partial[n]
        errs = [pi - FixedDecimal(s, work)]
        for k in orders:
            corr = (-1) ** n * eval_correction(k, n)
            errs.append(pi - FixedDecimal(s + div_round(unit * corr.numerator, corr.denominator), work))
        rows.append(ErrorRow(n, tuple(errs)))
    return rows


FIG1_SERIES = ("leibniz", "eq38", "eq39", "eq40")


def fig1_scale(n_max: int) -> int:
    """Decimal scale large enough to resolve the eq40 error at n_max."""
    return max(40, math.ceil(7 * math.log10(2 * n_max)) + 10)


def fig1_data(n_max: int, step: int = 1, scale: Optional[int] = None) -> list[tuple[int, tuple[float, ...]]]:
    """Rows ``(n, log10|pi/4 - s_n|)`` for the plain series and its three transforms."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if step < 1:
        raise ValueError("step must be at least 1")
    scale = fig1_scale(n_max) if scale is None else scale
    work = scale + working_guard(n_max)
    unit = 4 * 10**work
    pi = reference_pi(work + 2).rescale(work, HALF_EVEN)
    sums = {sid: kernels.block_prefix(_CATALOGUE[sid][0], 1, n_max + 1, unit) for sid in FIG1_SERIES}
    log4 = math.log10(4)
    rows = []
    for n in range(2, n_max + 1, step):
        logs = tuple(abs(pi - FixedDecimal(sums[sid][n - 1], work)).log10_abs() - log4 for sid in FIG1_SERIES)
        rows.append((n, logs))
    return rows


# -- symbolic identities ---------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: RationalFunction
    rhs: RationalFunction


def putumana_identity(power: int = 3) -> IdentityCheck:
    """1/(q^power - q) - 1/(r^3 - r) = (3/2)/((2(2n)^2-1)^2-(2n)^2), q = 4n-1, r = 4n+1.

    Holds for ``power=3``; ``power=2`` is the misprinted variant.
    """
    n = Poly.x()
    q = parse_poly("4n-1", "n")
    r = parse_poly("4n+1", "n")
    lhs = RationalFunction(1, q**power - q) - RationalFunction(1, r**3 - r)
    e = n * 2
    rhs = RationalFunction(Fraction(3, 2), (e * e * 2 - 1) ** 2 - e * e)
    return IdentityCheck(lhs == rhs, lhs, rhs)


def transformed_term_from_sthaulya(k: int, j: int) -> Fraction:
    """j-th term of the order-k transformed series built from the sthaulya.

    Uses ``1 - f(1)`` for j = 1 (the f(-1) = 0 convention) and
    ``(-1)^j I_k(2j-1)`` afterwards.
    """
    from .sthaulya import sthaulya_of

    if j == 1:
        return 1 - convergent(k).p_form(1)
    return (-1) ** j * sthaulya_of(k)(2 * j - 1)
