"""Univariate polynomials and reduced rational functions with exact coefficients.

:class:`Poly` works over any coefficient ring that supports ``+``, ``-``, ``*``
and comparison with ``0`` (ints, Fractions, or another :class:`Poly`, which is
how the parameter families are handled symbolically).  Everything that needs a
gcd assumes integer or rational coefficients.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence


class PoleError(ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, Poly) and c.degree < 1:
        return c.lc
    return c


class Poly:
    """Polynomial with coefficients stored in ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, c, power: int) -> "Poly":
        return cls([0] * power + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, power: int):
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _lift(other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(other)

    def __add__(self, other) -> "Poly":
        o = self._lift(other).coeffs
        s = self.coeffs
        n = max(len(s), len(o))
        return Poly((s[i] if i < len(s) else 0) + (o[i] if i < len(o) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other) -> "Poly":
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; ``x`` may itself be a polynomial (composition)."""
        if isinstance(x, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * x + Poly([c])
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_affine(self, a, b) -> "Poly":
        """Substitute ``x <- a*x + b``."""
        return self(Poly([b, a]))

    def shift(self, offset) -> "Poly":
        """Substitute ``x <- x + offset``."""
        return self.compose_affine(1, offset)

    def reflect(self) -> "Poly":
        """``x <- -x``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    # -- integer structure -----------------------------------------------

    def content(self) -> int:
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, (abs(c) for c in self.coeffs), 0)

    def primitive_part(self) -> "Poly":
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return Poly()
        c = self.content()
        if self.lc < 0:
            c = -c
        return Poly(x // c for x in self.coeffs)

    def clear_denominators(self) -> tuple["Poly", int]:
        """Return ``(P, d)`` with ``P = d * self`` integral and ``d > 0`` minimal."""
        d = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                d = d * c.denominator // math.gcd(d, c.denominator)
        return Poly(c * d for c in self.coeffs), d

    def render(self, var: str = "p", ascending: bool = False) -> str:
        return render_poly(self, var, ascending)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.render()


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Division with remainder over the rationals: ``a = b*q + r``, ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lead = Fraction(b.lc)
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c == 0:
            continue
        quot[i - db] = c
        for j, cb in enumerate(b.coeffs):
            rem[i - db + j] -= c * cb
    return Poly(quot), Poly(rem[:db])


def pseudo_rem(a: Poly, b: Poly) -> Poly:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``, all in integers."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lead = b.degree, b.lc
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lead for x in rem]
        for j, cb in enumerate(b.coeffs):
            rem[i - db + j] -= c * cb
    return Poly(rem[:db] if len(rem) > db else rem)


def exact_quotient(a: Poly, b: Poly) -> Poly:
    """``a / b`` when ``b`` divides ``a`` exactly; raises otherwise."""
    q, r = poly_divrem(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{b.render()} does not divide {a.render()}")
    return q


def _integral(p: Poly) -> Poly:
    return p if p.is_integral() else p.clear_denominators()[0]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (primitive remainder sequence)."""
    a, b = _integral(a), _integral(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if a.is_zero():
        return b.primitive_part()
    if b.is_zero():
        return a.primitive_part()
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_rem(a, b)
        a, b = b, (r.primitive_part() if not r.is_zero() else r)
    return a.primitive_part()


class RationalFunction:
    """Quotient of integer polynomials kept in canonical reduced form.

    ``gcd(num, den) = 1`` over the rationals, the two share no integer
    content, and ``den`` has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly._lift(num)
        den = Poly._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        num, dn = num.clear_denominators()
        den, dd = den.clear_denominators()
        num, den = num * dd, den * dn
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = exact_quotient(num, g), exact_quotient(den, g)
        c = math.gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        self.num = Poly(x // c for x in num.coeffs)
        self.den = Poly(x // c for x in den.coeffs)

    @classmethod
    def parse(cls, text: str, var: str = "p") -> "RationalFunction":
        return parse_ratfun(text, var)

    @staticmethod
    def _lift(other) -> "RationalFunction":
        return other if isinstance(other, RationalFunction) else RationalFunction(other)

    def __add__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._lift(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def shift(self, offset) -> "RationalFunction":
        return RationalFunction(self.num.shift(offset), self.den.shift(offset))

    def compose_affine(self, a, b) -> "RationalFunction":
        return RationalFunction(self.num.compose_affine(a, b), self.den.compose_affine(a, b))

    def __call__(self, x) -> Fraction:
        return ratfun_eval(self, x)

    def render(self, var: str = "p", ascending: bool = False) -> str:
        num = render_poly(self.num, var, ascending)
        if self.den == 1:
            return num
        den = render_poly(self.den, var, ascending)
        if self.num.term_count() > 1:
            num = f"({num})"
        bare = self.den.term_count() == 1 and (self.den.degree == 0 or self.den.lc == 1)
        if not bare:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()!r})"

    def __str__(self) -> str:
        return self.render()


def ratfun_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def ratfun_shift(f: RationalFunction, offset: int) -> RationalFunction:
    return f.shift(offset)


def ratfun_eval(f: RationalFunction, x) -> Fraction:
    x = Fraction(x)
    den = Fraction(f.den(x))
    if den == 0:
        raise PoleError(f"{f.render()} has a pole at {x}")
    return Fraction(f.num(x)) / den


# -- text form -----------------------------------------------------------

def _coef_text(c) -> str:
    if isinstance(c, Fraction):
        return f"({c})"
    return str(c)


def render_poly(p: Poly, var: str = "p", ascending: bool = False) -> str:
    """Stable text such as ``p^5+4p`` or ``-2p+3``."""
    terms = [(e, c) for e, c in enumerate(p.coeffs) if c != 0]
    if not terms:
        return "0"
    if not ascending:
        terms.reverse()
    out = []
    for i, (e, c) in enumerate(terms):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _coef_text(mag)
        else:
            v = var if e == 1 else f"{var}^{e}"
            body = v if mag == 1 else _coef_text(mag) + v
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^|\+|-|\*|/|\(|\)))")


class _Parser:
    def __init__(self, text: str, var: str):
        self.var = var
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            num, name, sym = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                if name != var:
                    raise ValueError(f"unexpected variable {name!r} (expected {var!r})")
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("sym", sym))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym: str) -> None:
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ValueError(f"expected {sym!r}")

    def expr(self) -> Poly:
        sign = 1
        kind, val = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "var") or (kind == "sym" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base**n
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "var":
            return Poly.x()
        if kind == "sym" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ValueError(f"unexpected token {val!r}")

    def done(self) -> bool:
        return self.i >= len(self.tokens)


def parse_poly(text: str, var: str = "p") -> Poly:
    """Parse text like ``2p^3+6p^2+16p+12`` or ``n(4n^2+5)``."""
    parser = _Parser(text, var)
    result = parser.expr()
    if not parser.done():
        raise ValueError(f"trailing input in {text!r}")
    return result


def parse_ratfun(text: str, var: str = "p") -> RationalFunction:
    """Parse ``NUM/DEN`` (one top-level slash) or a bare polynomial."""
    depth, cut = 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if cut is not None:
                raise ValueError(f"more than one top-level '/' in {text!r}")
            cut = i
    if cut is None:
        return RationalFunction(parse_poly(text, var))
    return RationalFunction(parse_poly(text[:cut], var), parse_poly(text[cut + 1 :], var))


def product(polys: Sequence[Poly]) -> Poly:
    return reduce(lambda a, b: a * b, polys, Poly.const(1))
