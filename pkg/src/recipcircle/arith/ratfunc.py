"""Reduced rational functions in one variable over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import UniPoly, poly_gcd


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    def __init__(self, t0):
        super().__init__(f"rational function has a pole at t = {t0}")
        self.t0 = t0


@dataclass(frozen=True)
class Infinite:
    """Signed infinity returned by :func:`limit_at_one` at a pole."""

    sign: int

    def __str__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"


class RationalFunction:
    """``num/den`` in lowest terms with a monic denominator.

    The canonical form makes ``==`` a coefficient comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = UniPoly.const(1) if den is None else _coerce_poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, UniPoly.const(1)
            return
        if not den.is_const():
            g = poly_gcd(num, den)
            if not g.is_const():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls._raw(UniPoly.const(c), UniPoly.const(1))

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls._raw(UniPoly((0, 1)), UniPoly.const(1))

    @classmethod
    def laurent(cls, coeff, power: int) -> "RationalFunction":
        """``coeff * t**power`` for any integer ``power``."""
        if power >= 0:
            return cls._raw(UniPoly.monomial(power, coeff), UniPoly.const(1))
        return cls(UniPoly.const(coeff), UniPoly.monomial(-power))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self
            return RationalFunction._raw(self.num + self.den * other, self.den)
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            n = a + c
            if n.is_zero():
                return RationalFunction.const(0)
            return RationalFunction(n, b)
        g = poly_gcd(b, d)
        if g.is_const():
            return RationalFunction._raw(a * d + c * b, b * d)
        bb = b.exact_div(g)
        dd = d.exact_div(g)
        n = a * dd + c * bb
        if n.is_zero():
            return RationalFunction.const(0)
        h = poly_gcd(n, g)
        if not h.is_const():
            n = n.exact_div(h)
            g = g.exact_div(h)
        return RationalFunction._raw(n, (bb * d).exact_div(h) if not h.is_const() else bb * d)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction.const(0)
            return RationalFunction._raw(self.num * other, self.den)
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction.const(0)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_const():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_const():
            c, b = c.exact_div(g2), b.exact_div(g2)
        den = b * d
        num = a * c
        lc = den.lead
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        lc = self.num.lead
        return RationalFunction._raw(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction._raw(self.num * (1 / Fraction(other)), self.den)
        other = _coerce_rf(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self.inverse() * other

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num**n, self.den**n)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, t0):
        return eval_at(self, t0)


def _coerce_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.const(x)
    return UniPoly(x)


def _coerce_rf(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.const(x)
    if isinstance(x, UniPoly):
        return RationalFunction._raw(x, UniPoly.const(1))
    return None


ScalarLike = Union[int, Fraction, RationalFunction]


def reduce(num: UniPoly, den: UniPoly) -> RationalFunction:
    """Canonical form of ``num/den``; raises :class:`DivisionByZero` for ``den == 0``."""
    return RationalFunction(num, den)


def eval_at(f: RationalFunction, t0) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    t0 = Fraction(t0)
    d = f.den(t0)
    if d == 0:
        raise PoleAtPoint(t0)
    return Fraction(f.num(t0)) / d


def limit_at_one(f: RationalFunction) -> Fraction | Infinite:
    """One-sided limit ``t -> 1+`` of a canonical rational function."""
    d1 = f.den(Fraction(1))
    n1 = Fraction(f.num(Fraction(1)))
    if d1 != 0:
        return n1 / d1
    if n1 == 0:
        raise ArithmeticError("non-canonical rational function: 0/0 at t = 1")
    # strip (t - 1) from the denominator; the remaining factor is nonzero at 1
    lin = UniPoly((-1, 1))
    rest = f.den
    while rest(Fraction(1)) == 0:
        rest = rest.exact_div(lin)
    sign = (1 if n1 > 0 else -1) * (1 if rest(Fraction(1)) > 0 else -1)
    return Infinite(sign)
