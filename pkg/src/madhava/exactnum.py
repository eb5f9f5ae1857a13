"""Exact scalars: rationals, scaled-integer decimals and integer square roots.

Rationals are :class:`fractions.Fraction`, which is always stored reduced with
a positive denominator.  :class:`FixedDecimal` is a plain ``mantissa * 10**-scale``
pair whose scale never changes behind the caller's back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigRational = Fraction

HALF_EVEN = "half-even"
FLOOR = "floor"
CEIL = "ceil"
ROUNDING_MODES = (HALF_EVEN, FLOOR, CEIL)

RationalLike = Union[int, Fraction]


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply ``op`` (add, sub, mul, div) to two exact rationals."""
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


def div_round(num: int, den: int, mode: str = HALF_EVEN) -> int:
    """Round ``num / den`` to an integer with the given rounding mode."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    if den < 0:
        num, den = -num, -den
    q, r = divmod(num, den)
    if mode == FLOOR or r == 0:
        return q
    if mode == CEIL:
        return q + 1
    if mode != HALF_EVEN:
        raise ValueError(f"unknown rounding mode {mode!r}")
    twice = 2 * r
    if twice > den or (twice == den and q & 1):
        return q + 1
    return q


@dataclass(frozen=True, order=False)
class FixedDecimal:
    """A decimal value ``mantissa * 10**(-scale)`` with an explicit scale."""

    mantissa: int
    scale: int

    def __post_init__(self) -> None:
        if self.scale < 0:
            raise ValueError("scale must be non-negative")

    @classmethod
    def from_rational(cls, q: RationalLike, scale: int, mode: str = HALF_EVEN) -> "FixedDecimal":
        q = Fraction(q)
        return cls(div_round(q.numerator * 10**scale, q.denominator, mode), scale)

    def _check(self, other: "FixedDecimal") -> None:
        if not isinstance(other, FixedDecimal):
            raise TypeError(f"expected FixedDecimal, got {type(other).__name__}")
        if other.scale != self.scale:
            raise ValueError(f"scale mismatch: {self.scale} vs {other.scale}")

    def __add__(self, other: "FixedDecimal") -> "FixedDecimal":
        self._check(other)
        return FixedDecimal(self.mantissa + other.mantissa, self.scale)

    def __sub__(self, other: "FixedDecimal") -> "FixedDecimal":
        self._check(other)
        return FixedDecimal(self.mantissa - other.mantissa, self.scale)

    def __neg__(self) -> "FixedDecimal":
        return FixedDecimal(-self.mantissa, self.scale)

    def __abs__(self) -> "FixedDecimal":
        return FixedDecimal(abs(self.mantissa), self.scale)

    def scaled_by(self, factor: int) -> "FixedDecimal":
        """Exact multiplication by an integer."""
        return FixedDecimal(self.mantissa * factor, self.scale)

    def __lt__(self, other: "FixedDecimal") -> bool:
        self._check(other)
        return self.mantissa < other.mantissa

    def __le__(self, other: "FixedDecimal") -> bool:
        self._check(other)
        return self.mantissa <= other.mantissa

    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def rescale(self, scale: int, mode: str = HALF_EVEN) -> "FixedDecimal":
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if scale >= self.scale:
            return FixedDecimal(self.mantissa * 10 ** (scale - self.scale), scale)
        return FixedDecimal(div_round(self.mantissa, 10 ** (self.scale - scale), mode), scale)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __str__(self) -> str:
        sign = "-" if self.mantissa < 0 else ""
        digits = str(abs(self.mantissa))
        if self.scale == 0:
            return sign + digits
        digits = digits.rjust(self.scale + 1, "0")
        return f"{sign}{digits[:-self.scale]}.{digits[-self.scale:]}"

    def to_scientific(self, sig: int = 8) -> str:
        """Render as ``+d.ddddddde-XX`` with ``sig`` significant digits (half-even)."""
        if self.mantissa == 0:
            return "+0." + "0" * (sig - 1) + "e+00"
        sign = "-" if self.mantissa < 0 else "+"
        m = abs(self.mantissa)
        exp = len(str(m)) - 1 - self.scale
        shift = len(str(m)) - sig
        if shift >= 0:
            lead = div_round(m, 10**shift)
        else:
            lead = m * 10 ** (-shift)
        if lead >= 10**sig:
            lead = div_round(lead, 10)
            exp += 1
        text = str(lead)
        return f"{sign}{text[0]}.{text[1:]}e{exp:+03d}"

    def log10_abs(self) -> float:
        """log10 of the magnitude, accurate to far better than 1e-3."""
        m = abs(self.mantissa)
        if m == 0:
            return float("-inf")
        text = str(m)
        lead = int(text[:17]) / 10 ** (min(len(text), 17) - 1)
        return (len(text) - 1 - self.scale) + math.log10(lead)


def rat_to_fixed(q: RationalLike, scale: int, mode: str = HALF_EVEN) -> FixedDecimal:
    if scale < 0:
        raise ValueError("scale must be non-negative")
    return FixedDecimal.from_rational(q, scale, mode)


def int_isqrt(x: int) -> int:
    """Largest ``r`` with ``r*r <= x``."""
    if x < 0:
        raise ValueError("square root of a negative integer")
    return math.isqrt(x)


def fixed_sqrt(x: int, scale: int) -> FixedDecimal:
    """Square root of ``x`` truncated to ``scale`` fractional digits."""
    if x < 0:
        raise ValueError("square root of a negative integer")
    if scale < 0:
        raise ValueError("scale must be non-negative")
    return FixedDecimal(math.isqrt(x * 10 ** (2 * scale)), scale)
