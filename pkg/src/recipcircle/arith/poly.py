"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from ..kernels import gcd_mod_p

Scalar = Union[int, Fraction]


def _strip(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Polynomial in one variable ``t``; ``coeffs[i]`` multiplies ``t**i``.

    The zero polynomial has an empty coefficient tuple, so the highest stored
    coefficient is always nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            coef = f"({mag})" if mag.denominator != 1 and mono else str(mag)
            term = mono if mono and mag == 1 else (f"{coef}*{mono}" if mono else coef)
            if not out:
                out = ("-" if c < 0 else "") + term
            else:
                out += (" - " if c < 0 else " + ") + term
        return out

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UniPoly._raw(())
            return UniPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly._raw(())
        if len(self.coeffs) == 1:
            return other * self.coeffs[0]
        if len(other.coeffs) == 1:
            return self * other.coeffs[0]
        a, sa = self.int_view()
        b, sb = other.int_view()
        s = sa * sb
        return UniPoly._raw(tuple(Fraction(x) * s for x in int_mul(a, b)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return UniPoly._raw(()), self
        inv_lead = 1 / other.lead
        quot = [Fraction(0)] * (len(rem) - db)
        b = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c * inv_lead
            quot[i - db] = f
            for j in range(db + 1):
                rem[i - db + j] -= f * b[j]
        return UniPoly._raw(_strip(quot)), UniPoly._raw(_strip(rem[:db]))

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        if len(self.coeffs) < len(other.coeffs):
            raise ArithmeticError(f"{other} does not divide {self}")
        a, sa = self.int_view()
        b, sb = other.int_view()
        try:
            q = int_exact_quotient(a, b)
        except ArithmeticError:
            raise ArithmeticError(f"{other} does not divide {self}") from None
        factor = sa / sb
        return UniPoly._raw(tuple(Fraction(x) * factor for x in q))

    def int_view(self) -> tuple[list[int], Fraction]:
        """``(ints, s)`` with ``self == s * UniPoly(ints)`` and ``ints`` primitive."""
        if not self.coeffs:
            return [], Fraction(0)
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        cont = reduce(gcd, ints, 0)
        if cont != 1:
            ints = [x // cont for x in ints]
        return ints, Fraction(cont, den)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return UniPoly._raw(tuple(c / lc for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "UniPoly":
        """Multiply by ``t**k`` (``k >= 0``)."""
        if not self.coeffs or k == 0:
            return self
        return UniPoly._raw((Fraction(0),) * k + self.coeffs)

    def valuation(self) -> int:
        """Largest ``k`` with ``t**k`` dividing the polynomial (0 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def to_float(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    # -- integer views -----------------------------------------------------

    def primitive_int(self) -> list[int]:
        """Integer coefficients of the primitive part, leading sign kept."""
        if not self.coeffs:
            return []
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        cont = reduce(gcd, ints, 0)
        return [x // cont for x in ints]


def _as_poly(x) -> UniPoly | None:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.const(x)
    return None


# -- integer polynomial kernels (ascending lists of ints) --------------------


def _int_strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_content(a: Sequence[int]) -> int:
    return reduce(gcd, a, 0)


def _int_primitive(a: list[int]) -> list[int]:
    cont = _int_content(a)
    if cont in (0, 1):
        return a
    return [x // cont for x in a]


def int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b`` over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(r) - 1 - db
    if delta < 0:
        return r
    for _ in range(delta + 1):
        if len(r) - 1 < db:
            r = [lb * x for x in r]
            continue
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        _int_strip(r)
    return r


def int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a = _int_primitive(_int_strip(list(a)))
    b = _int_primitive(_int_strip(list(b)))
    if not a:
        out = b
    elif not b:
        out = a
    else:
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = int_prem(a, b)
            a, b = b, _int_primitive(r)
        out = a
    if out and out[-1] < 0:
        out = [-x for x in out]
    return out


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero only if both inputs are zero)."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.is_const() or q.is_const():
        return UniPoly.const(1)
    a, b = p.primitive_int(), q.primitive_int()
    if len(a) + len(b) > _MODULAR_THRESHOLD:
        g = int_gcd_modular(a, b)
    else:
        g = int_gcd(a, b)
    return UniPoly(g).monic()


# -- modular gcd ------------------------------------------------------------------

_MODULAR_THRESHOLD = 24


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:  # deterministic for n < 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# primes stay below 2**31 so products of residues fit in a signed 64-bit word
_PRIME_CEILING = 1 << 31


def _primes_below(start: int):
    n = start - 1 if start % 2 == 0 else start - 2
    while n > 2:
        if _is_probable_prime(n):
            yield n
        n -= 2


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of two polynomials over GF(p) (ascending coefficient lists)."""
    return gcd_mod_p(a, b, p)


def _divides_over_q(d: list[int], a: list[int]) -> bool:
    if len(d) > len(a):
        return len(d) == 1
    d = _int_primitive(list(d))
    try:
        int_exact_quotient(a, d)
    except ArithmeticError:
        return False
    return True


def int_gcd_modular(a: list[int], b: list[int]) -> list[int]:
    """Gcd of primitive integer polynomials by the small-primes method.

    Images modulo large primes are combined by Chinese remaindering until the
    primitive part of the symmetric lift divides both inputs.
    """
    a = _int_primitive(_int_strip(list(a)))
    b = _int_primitive(_int_strip(list(b)))
    if not a or not b:
        return int_gcd(a, b)
    lc = gcd(a[-1], b[-1])
    best_deg = None
    modulus = 1
    acc: list[int] = []
    for p in _primes_below(_PRIME_CEILING):
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        gp = _gcd_mod_p(a, b, p)
        d = len(gp) - 1
        if d == 0:
            return [1]
        if best_deg is not None and d > best_deg:
            continue  # unlucky prime
        gp = [x * lc % p for x in gp]
        if best_deg is None or d < best_deg:
            best_deg, modulus, acc = d, p, gp
        else:
            inv = pow(modulus, -1, p)
            acc = [x + modulus * ((y - x) * inv % p) for x, y in zip(acc, gp)]
            modulus *= p
        half = modulus // 2
        lifted = [x - modulus if x > half else x for x in acc]
        cand = _int_primitive(_int_strip(list(lifted)))
        if cand and cand[-1] < 0:
            cand = [-x for x in cand]
        if _divides_over_q(cand, a) and _divides_over_q(cand, b):
            return cand
    raise ArithmeticError("modular gcd did not terminate")  # pragma: no cover


# -- shifts and sign rules -----------------------------------------------------------


def int_taylor_shift(a: Sequence[int], c: int = 1) -> list[int]:
    """Coefficients of ``a(x + c)``."""
    out = list(a)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def sign_variations(a: Sequence) -> int:
    """Number of sign changes in a coefficient sequence (zeros skipped)."""
    last = 0
    count = 0
    for x in a:
        if x == 0:
            continue
        s = 1 if x > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def int_sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _int_strip(out)


def int_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    return _int_strip(out)


def int_exact_quotient(a: list[int], b: list[int]) -> list[int]:
    """``a / b`` for a primitive ``b`` that divides ``a`` over Q.

    By Gauss's lemma the quotient then has integer coefficients, so the long
    division never leaves Z.  Raises ``ArithmeticError`` if ``b`` does not
    divide ``a``.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    delta = len(a) - 1 - db
    if delta < 0:
        raise ArithmeticError("divisor has larger degree")
    lb = b[-1]
    r = list(a)
    q = [0] * (delta + 1)
    for step in range(delta, -1, -1):
        c = r[db + step]
        if c == 0:
            continue
        f, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[step] = f
        for j in range(db + 1):
            r[step + j] -= f * b[j]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def square_free_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic square-free factors ``f_i`` with ``p ~ prod f_i**i``."""
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out
