from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from recipcircle.arith import (
    BigRational,
    DivisionByZero,
    GaussianRational,
    Infinite,
    NotPositive,
    PoleAtPoint,
    RationalFunction,
    UniPoly,
    ZeroPolynomial,
    eval_at,
    limit_at_one,
    poly_gcd,
    positive_on_right_ray,
    reduce,
    square_free_decomposition,
    sturm_count,
)
from recipcircle.arith.poly import int_gcd, int_gcd_modular
from recipcircle.criterion import SelfReciprocalPoly, r_sequence, run_omega

from helpers import rationals

T = UniPoly((0, 1))
ONE = UniPoly.const(1)


def poly(*c):
    return UniPoly(c)


def to_sympy(p: UniPoly):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])), x,
                      domain="QQ")


polys = st.lists(rationals(10, 6), min_size=0, max_size=6).map(UniPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# -- BigRational --------------------------------------------------------------------


def test_big_rational_is_normalized():
    x = BigRational(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)
    assert BigRational(10**40 + 1, 10**40) > 1


# -- reduce -------------------------------------------------------------------------


def test_reduce_cancels_common_factor():
    f = reduce(poly(-1, 0, 1), poly(-1, 1))
    assert f.num == poly(1, 1) and f.den == ONE


def test_reduce_zero_numerator():
    f = reduce(UniPoly(), T**3)
    assert f.num.is_zero() and f.den == ONE


def test_reduce_cancels_shared_linear_factor():
    f = reduce(poly(1, 0, 1) * poly(-2, 1), poly(-2, 1))
    assert f.num == poly(1, 0, 1) and f.den == ONE


def test_reduce_zero_denominator():
    with pytest.raises(DivisionByZero):
        reduce(ONE, UniPoly())


def test_denominator_is_monic():
    f = reduce(poly(1), poly(3, 6))
    assert f.den.lead == 1
    assert eval_at(f, 1) == Fraction(1, 9)


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_reduce_is_canonical(p, q, r):
    f = reduce(p * r, q * r)
    g = reduce(p, q)
    assert (f.num, f.den) == (g.num, g.den)


@given(polys, nonzero_polys, rationals(6, 5))
def test_reduce_preserves_values(p, q, t0):
    assume(q(t0) != 0)
    assert eval_at(reduce(p, q), t0) == p(t0) / q(t0)


# -- eval_at and limit_at_one --------------------------------------------------------


def test_eval_at_examples():
    f = reduce(poly(1, 0, 1), poly(-1, 0, 1))
    assert eval_at(f, 2) == Fraction(5, 3)
    assert eval_at(RationalFunction.const(1), Fraction(7, 3)) == 1
    with pytest.raises(PoleAtPoint):
        eval_at(reduce(poly(1, 1), poly(-1, 1)), 1)


def test_limit_at_one_examples():
    assert limit_at_one(reduce(poly(1, 1), poly(-1, 1))) == Infinite(1)
    assert limit_at_one(reduce(poly(-3), poly(-1, 1) ** 2 * poly(-2, 1))) == Infinite(1)
    assert limit_at_one(reduce(poly(-1, 0, 1), poly(-1, 1))) == 2
    assert limit_at_one(reduce(poly(-1), poly(-1, 1))) == Infinite(-1)


def test_limit_of_omega_r2_is_closed_form():
    R = r_sequence(run_omega(SelfReciprocalPoly((1, 1))))
    c0, c1 = 1, 1
    assert limit_at_one(R[2]) == Fraction(2 * c0 + c1, 2 * c0 - c1) == 3


@given(polys, nonzero_polys)
def test_limit_matches_nearby_value(p, q):
    f = reduce(p, q)
    lim = limit_at_one(f)
    assume(not isinstance(lim, Infinite))
    near = float(eval_at(f, 1 + Fraction(1, 10**6)))
    assert abs(near - float(lim)) <= 1e-3 * max(1.0, abs(float(lim)))


# -- RationalFunction field laws -----------------------------------------------------


rfs = st.tuples(polys, nonzero_polys).map(lambda pq: reduce(*pq))


@given(rfs, rfs, rfs)
def test_field_laws(a, b, c):
    assert (a + b) - b == a
    assert a * (b + c) == a * b + a * c
    if not b.is_zero():
        assert (a * b) / b == a
        assert b * b.inverse() == RationalFunction.const(1)


# -- gcd ---------------------------------------------------------------------------------


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_poly_gcd_matches_sympy(a, b, c):
    got = poly_gcd(a * c, b * c)
    want = to_sympy(a * c).gcd(to_sympy(b * c))
    assert to_sympy(got.monic()) == want.monic()


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8),
       st.lists(st.integers(-50, 50), min_size=1, max_size=8),
       st.lists(st.integers(-9, 9), min_size=2, max_size=4))
def test_modular_gcd_matches_prs(a, b, c):
    assume(any(a) and any(b) and any(c[1:]))
    from recipcircle.arith.poly import int_mul
    x, y = int_mul(a, c), int_mul(b, c)
    g1, g2 = int_gcd(x, y), int_gcd_modular(x, y)
    # both are primitive up to sign
    assert g1 == g2 or g1 == [-v for v in g2]


@given(st.lists(st.tuples(rationals(4, 3), st.integers(1, 3)), min_size=1, max_size=4))
def test_square_free_decomposition(factors):
    roots = {}
    for r, e in factors:
        roots[r] = roots.get(r, 0) + e
    p = UniPoly.const(3)
    for r, e in roots.items():
        p = p * UniPoly.from_roots([r]) ** e
    got = {}
    for f, e in square_free_decomposition(p):
        for r in roots:
            if f(r) == 0:
                got[r] = e
    assert got == roots


# -- Sturm counting -----------------------------------------------------------------


def test_sturm_count_examples():
    assert sturm_count(poly(2, -3, 1)) == 1
    assert sturm_count(poly(1, 0, 1)) == 0
    assert sturm_count(poly(-2, 1) ** 2 * poly(-3, 1)) == 2
    with pytest.raises(ZeroPolynomial):
        sturm_count(UniPoly())


@given(st.lists(rationals(6, 4), min_size=1, max_size=7), st.booleans(), st.integers(0, 3))
def test_sturm_count_on_known_roots(roots, prescreen, complex_factors):
    p = UniPoly.from_roots(roots)
    for k in range(complex_factors):
        p = p * poly(k + 2, 1, 1)  # no real roots
    expected = len({r for r in roots if r > 1})
    assert sturm_count(p, prescreen=prescreen) == expected


# -- positivity on (1, inf) ---------------------------------------------------------


def test_positive_on_right_ray_examples():
    assert positive_on_right_ray(reduce(poly(1, 0, 1), poly(-1, 0, 1)))
    assert not positive_on_right_ray(reduce(poly(-2, 1), ONE))
    assert not positive_on_right_ray(RationalFunction.const(-1))
    with pytest.raises(NotPositive):
        positive_on_right_ray(RationalFunction.const(0))


@given(st.lists(rationals(6, 4), min_size=0, max_size=4),
       st.lists(rationals(6, 4), min_size=0, max_size=4),
       rationals(5, 3, nonzero=True))
def test_positivity_matches_root_analysis(num_roots, den_roots, scale):
    f = reduce(UniPoly.from_roots(num_roots) * scale, UniPoly.from_roots(den_roots))
    if f.is_zero():
        return
    # value just right of 1 and on each subinterval decides positivity exactly
    crit = sorted({r for r in num_roots + den_roots if r > 1})
    sign_changes = any(f.num(r) == 0 or f.den(r) == 0 for r in crit)
    pts = [Fraction(1) + Fraction(1, 10**6)] + [r + Fraction(1, 10**6) for r in crit]
    positive = not sign_changes and all(eval_at(f, x) > 0 for x in pts)
    assert positive_on_right_ray(f) == positive


# -- Gaussian rationals -----------------------------------------------------------------


gauss = st.builds(GaussianRational, rationals(10, 8), rationals(10, 8))


@given(gauss, gauss)
def test_gaussian_conjugation_and_norm(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * b).norm() == a.norm() * b.norm()
    assert a.conj().conj() == a
    assert a * a.conj() == GaussianRational(a.norm())
