"""Exact real-root counting on the ray ``(1, +inf)`` with Sturm chains."""

from __future__ import annotations

from fractions import Fraction

from .poly import UniPoly, _int_primitive, _int_strip, int_prem, int_taylor_shift, sign_variations
from .ratfunc import RationalFunction, eval_at


class ZeroPolynomial(ValueError):
    pass


class NotPositive(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _signed_prem(a: list[int], b: list[int]) -> list[int]:
    # prem scales by lc(b)**(delta+1); undo a negative multiplier so signs survive
    r = int_prem(a, b)
    delta = len(a) - len(b)
    if b[-1] < 0 and (delta + 1) % 2 == 1:
        r = [-x for x in r]
    return r


def _positive_primitive(a: list[int]) -> list[int]:
    p = _int_primitive(list(a))
    if p and a and (p[-1] > 0) != (a[-1] > 0):
        p = [-x for x in p]
    return p


def sturm_chain(p: UniPoly) -> list[list[int]]:
    """Signed remainder sequence with integer coefficients.

    Every element is a positive multiple of the classical Sturm polynomial,
    so sign-change counts are unchanged.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    p0 = _positive_primitive(p.primitive_int())
    p1 = _positive_primitive(_int_strip([i * c for i, c in enumerate(p0)][1:]))
    chain = [p0]
    if p1:
        chain.append(p1)
    while len(chain) >= 2 and len(chain[-1]) > 1:
        r = _signed_prem(chain[-2], chain[-1])
        _int_strip(r)
        if not r:
            break
        chain.append(_positive_primitive([-x for x in r]))
    return chain


def _eval_int(a: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign_changes(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _strip_ones(p: UniPoly) -> UniPoly:
    lin = UniPoly((-1, 1))
    while p.degree > 0 and p(Fraction(1)) == 0:
        p = p.exact_div(lin)
    return p


def sturm_count(p: UniPoly, prescreen: bool = True) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(1, +inf)``.

    With ``prescreen`` the coefficients of ``p(1 + x)`` are inspected first:
    zero sign variations prove there is no root and exactly one variation
    proves a single simple root, so the chain is only built when the sign
    rule is inconclusive.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    p = _strip_ones(p)
    if p.degree < 1:
        return 0
    if prescreen:
        v = sign_variations(int_taylor_shift(p.primitive_int(), 1))
        if v <= 1:
            return v
    chain = sturm_chain(p)
    at_one = [_sign(_eval_int(c, Fraction(1))) for c in chain]
    at_inf = [_sign(c[-1]) for c in chain]
    return _sign_changes(at_one) - _sign_changes(at_inf)


def has_root_on_ray(p: UniPoly) -> bool:
    """Whether ``p`` vanishes somewhere in ``(1, +inf)``."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    if p.degree < 1:
        return False
    return sturm_count(p) > 0


def positive_on_right_ray(f: RationalFunction) -> bool:
    """True iff ``f(t)`` is finite and strictly positive for every ``t > 1``.

    ``num`` and ``den`` are coprime, so ``num*den`` has a root on the ray
    exactly when ``num`` or ``den`` does; the two factors are screened
    separately, which keeps the degrees down.
    """
    if f.is_zero():
        raise NotPositive("identically zero rational function")
    if has_root_on_ray(f.den) or has_root_on_ray(f.num):
        return False
    return eval_at(f, 2) > 0


def ray_certificate(f: RationalFunction) -> dict:
    """Root counts behind :func:`positive_on_right_ray` for reporting."""
    if f.is_zero():
        return {"identically_zero": True, "positive": False}
    num_roots = sturm_count(f.num) if f.num.degree > 0 else 0
    den_roots = sturm_count(f.den) if f.den.degree > 0 else 0
    sample = eval_at(f, 2) if f.den(Fraction(2)) != 0 else None
    return {
        "num_roots_on_ray": num_roots,
        "den_roots_on_ray": den_roots,
        "value_at_2": sample,
        "positive": num_roots == 0 and den_roots == 0 and sample is not None and sample > 0,
    }
