from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from recipcircle.arith import RationalFunction, UniPoly, eval_at
from recipcircle.linsys import (
    SingularStep,
    apply_step,
    build_P,
    build_Q,
    build_step,
    det_P_closed_form,
    mat_vec,
)

from helpers import det, matmul, rationals


def test_P0_is_identity():
    assert build_P(0, Fraction(7)) == [[1, 0], [0, 1]]


def test_P1_last_row():
    P = build_P(1, Fraction(5))
    assert len(P) == 4 and all(len(r) == 4 for r in P)
    assert P[-1] == [0, 1, 0, -5]


def test_det_P2_is_2m():
    for m in (Fraction(3), Fraction(-2, 7), Fraction(11, 5)):
        assert det(build_P(2, m)) == 2 * m


def test_Q_examples():
    assert build_Q(0) == [[1, 1, 0, 0], [0, 0, 1, -1]]
    Q1 = build_Q(1)
    assert len(Q1) == 4 and all(len(r) == 6 for r in Q1)
    assert Q1[2] == [0, 0, 0, 1, 0, -1]
    Q4 = build_Q(4)
    assert all(sum(r) == 0 and not any(r) for r in Q4[-4:])


def test_step_examples():
    assert build_step(0, Fraction(9)) == [[1, 1, 0, 0], [0, 0, 1, -1]]
    S = build_step(1, Fraction(2))
    assert S[-1] == [0, Fraction(1, 2), 0, 0, 0, 0]
    m = Fraction(3, 7)
    assert matmul(build_P(5, m), build_step(5, m)) == build_Q(5)


def test_det_closed_form_examples():
    m = Fraction(5, 3)
    assert det_P_closed_form(1, m) == -m == det(build_P(1, m))
    assert det_P_closed_form(4, m) == -4 * m**2 == det(build_P(4, m))
    assert det_P_closed_form(3, m) == -2 * m**2 == det(build_P(3, m))


def test_singular_step():
    with pytest.raises(SingularStep):
        build_step(3, Fraction(0))


@pytest.mark.parametrize("k", range(1, 13))
def test_det_matches_brute_force(k):
    rng = __import__("random").Random(k)
    for _ in range(5):
        m = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 17))
        assert det(build_P(k, m)) == det_P_closed_form(k, m)


@given(st.integers(0, 12), rationals(30, 20, nonzero=True))
def test_P_times_step_is_Q(k, m):
    assert matmul(build_P(k, m), build_step(k, m)) == build_Q(k)


@given(st.integers(1, 12), rationals(30, 20, nonzero=True), rationals(30, 20, nonzero=True))
def test_marked_rows_do_not_depend_on_m(k, m1, m2):
    S1, S2 = build_step(k, m1), build_step(k, m2)
    assert S1[0] == S2[0]
    assert S1[k + 1] == S2[k + 1]
    expected0 = [0] * (2 * k + 4)
    expected0[0] = expected0[k + 1] = Fraction(1, 2) if k > 0 else 1
    # row 1 pairs the first entry with entry k+2 of the input
    assert [x != 0 for x in S1[0]] == [x != 0 for x in expected0]


@given(st.integers(1, 8), rationals(10, 9, nonzero=True),
       st.lists(rationals(10, 9), min_size=20, max_size=20))
def test_apply_step_matches_matrix(k, m, v):
    v = v[: 2 * k + 4]
    assert apply_step(k, m, v) == mat_vec(build_step(k, m), v)


@given(st.integers(1, 6),
       st.lists(rationals(5, 4), min_size=2, max_size=3),
       st.lists(rationals(5, 4), min_size=1, max_size=3),
       st.lists(st.fractions(min_value=Fraction(9, 8), max_value=5, max_denominator=9),
                min_size=5, max_size=5))
def test_step_commutes_with_evaluation(k, num, den, points):
    m = RationalFunction(UniPoly(num) + UniPoly([0, 0, 0, 1]), UniPoly(den) + UniPoly([0, 0, 1]))
    S = build_step(k, m)
    for t0 in points:
        if m.den(t0) == 0 or m.num(t0) == 0:
            continue
        m0 = eval_at(m, t0)
        evaluated = [[eval_at(RationalFunction.const(1) * x, t0) for x in row] for row in S]
        assert evaluated == build_step(k, m0)
