"""Reconstruction of correction terms by Euclidean peeling of the truncation error.

Assume a rational value of pi, take the exact error ``S(n)`` of the n-term
odd-reciprocal partial sum, and repeatedly write the current fraction as
``1/(quotient + remainder)``.  Reading off integer linear patterns in the
quotients across n gives nested-fraction correction terms.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .polyalg import Poly, RationalFunction


@dataclass(frozen=True)
class PeelLayer:
    quotient: int
    remainder: Fraction


def leibniz_sum(n: int) -> Fraction:
    return sum((Fraction((-1) ** (j - 1), 2 * j - 1) for j in range(1, n + 1)), Fraction(0))


def s_of_n(pi_assumed, n: int) -> Fraction:
    """``|sum_{j<=n} (-1)^(j-1)/(2j-1) - pi_assumed/4|``."""
    pi_assumed = Fraction(pi_assumed)
    if n < 1:
        raise ValueError("n must be at least 1")
    if pi_assumed <= 0:
        raise ValueError("assumed pi must be positive")
    return abs(leibniz_sum(n) - pi_assumed / 4)


def peel(q) -> PeelLayer:
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"can only peel fractions in (0, 1), got {q}")
    inv = 1 / q
    whole = math.floor(inv)
    return PeelLayer(whole, inv - whole)


def peel_all(q, depth: Optional[int] = None) -> list[PeelLayer]:
    """Peel until the remainder is zero or ``depth`` layers are taken."""
    layers = []
    q = Fraction(q)
    while q != 0 and (depth is None or len(layers) < depth):
        layer = peel(q)
        layers.append(layer)
        q = layer.remainder
    return layers


@dataclass(frozen=True)
class LinearPattern:
    slope: int
    intercept: int

    def __call__(self, n: int) -> int:
        return self.slope * n + self.intercept

    def as_poly(self) -> Poly:
        return Poly([self.intercept, self.slope])

    def render(self) -> str:
        return self.as_poly().render("n") if self.slope or self.intercept else "0"


def min_support(n_max: int) -> int:
    return math.ceil((n_max + 1) / 2) + 1


def fit_linear(ns: Sequence[int], values: Sequence[int]) -> tuple[Optional[LinearPattern], list[int]]:
    """Exact integer line through the most points, by vote over point pairs.

    Each pair of points proposes a line; the line proposed by the most pairs
    wins if its slope and intercept are integers and it passes through at
    least ``min_support(max(ns))`` points.  Returns the pattern (or None) and
    the n values off the line.
    """
    votes = Counter()
    for (n1, v1), (n2, v2) in combinations(zip(ns, values), 2):
        slope = Fraction(v2 - v1, n2 - n1)
        votes[(slope, v1 - slope * n1)] += 1
    needed = min_support(max(ns))
    for (slope, intercept), _ in votes.most_common():
        if slope.denominator != 1 or intercept.denominator != 1:
            continue
        pattern = LinearPattern(int(slope), int(intercept))
        off = [n for n, v in zip(ns, values) if pattern(n) != v]
        if len(ns) - len(off) >= needed:
            return pattern, off
        break
    return None, list(ns)


def nested_fraction(patterns: Sequence[LinearPattern]) -> RationalFunction:
    """``1/(P1(n) + 1/(P2(n) + ... + 1/Pd(n)))`` as a reduced function of n."""
    acc: Optional[RationalFunction] = None
    for pat in reversed(patterns):
        base = RationalFunction(pat.as_poly())
        acc = base if acc is None else base + 1 / acc
    if acc is None:
        raise ValueError("need at least one pattern")
    return 1 / acc


@dataclass(frozen=True)
class ReconstructionReport:
    pi_assumed: Fraction
    ns: tuple[int, ...]
    s_values: tuple[Fraction, ...]
    quotients: tuple[tuple[Optional[int], ...], ...]  # levels x n
    remainders: tuple[tuple[Optional[Fraction], ...], ...]
    patterns: tuple[Optional[LinearPattern], ...]
    anomalies: tuple[tuple[int, int, Optional[int]], ...]  # (level, n, quotient)
    implied: tuple[RationalFunction, ...]  # implied term at depth 1, 2, ...


def reconstruct(pi_assumed, n_max: int = 5, depth: int = 3) -> ReconstructionReport:
    pi_assumed = Fraction(pi_assumed)
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    ns = tuple(range(1, n_max + 1))
    s_values = tuple(s_of_n(pi_assumed, n) for n in ns)
    quot = [[None] * n_max for _ in range(depth)]
    rems = [[None] * n_max for _ in range(depth)]
    for col, s in enumerate(s_values):
        if not 0 < s < 1:
            continue
        for level, layer in enumerate(peel_all(s, depth)):
            quot[level][col] = layer.quotient
            rems[level][col] = layer.remainder
    patterns, anomalies = [], []
    for level in range(depth):
        pts = [(n, q) for n, q in zip(ns, quot[level]) if q is not None]
        if len(pts) < 2:
            patterns.append(None)
            continue
        pattern, off = fit_linear([n for n, _ in pts], [q for _, q in pts])
        patterns.append(pattern)
        if pattern is not None:
            anomalies.extend((level + 1, n, quot[level][n - 1]) for n in off)
            anomalies.extend((level + 1, n, None) for n, q in zip(ns, quot[level]) if q is None)
    implied = []
    for d in range(1, depth + 1):
        if any(p is None for p in patterns[:d]):
            break
        implied.append(nested_fraction(patterns[:d]))
    return ReconstructionReport(
        pi_assumed,
        ns,
        s_values,
        tuple(tuple(r) for r in quot),
        tuple(tuple(r) for r in rems),
        tuple(patterns),
        tuple(anomalies),
        tuple(implied),
    )


Display = tuple[Union[int, Poly], Union[int, Poly]]


def mediant(a: Display, b: Display) -> Union[Fraction, RationalFunction]:
    """``(num_a + num_b)/(den_a + den_b)`` on the displayed (unreduced) pairs."""
    num = a[0] + b[0]
    den = a[1] + b[1]
    if isinstance(num, int) and isinstance(den, int):
        if den == 0:
            raise ZeroDivisionError("mediant with zero denominator sum")
        return Fraction(num, den)
    if den == 0:
        raise ZeroDivisionError("mediant with zero denominator sum")
    return RationalFunction(num, den)
