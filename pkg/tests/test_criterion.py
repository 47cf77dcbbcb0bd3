import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from recipcircle.arith import RationalFunction, UniPoly, eval_at
from recipcircle.criterion import (
    DEFAULT_SAMPLES,
    InvalidPolynomial,
    RNotAvailable,
    SelfReciprocalPoly,
    StateVector,
    StepFailure,
    StepStatus,
    initial_vector_log,
    initial_vector_omega,
    limit_check,
    m_top_omega,
    r_sequence,
    recursion_step,
    report_to_json,
    run_at,
    run_log,
    run_omega,
    run_omega_sampled,
    verdict_from_r,
)

from helpers import coeff_lists, rationals

F = Fraction
T = RationalFunction.t()


def P(*c):
    return SelfReciprocalPoly(c)


def complete_log(c):
    rep = run_log(SelfReciprocalPoly(c))
    return rep if rep.complete and all(m != 0 for m in rep.m_values) else None


# -- construction ------------------------------------------------------------------


def test_rejects_degenerate_input():
    with pytest.raises(InvalidPolynomial):
        P(0, 1)
    with pytest.raises(InvalidPolynomial):
        P(1)


def test_polynomial_evaluation():
    p = P(4, -16, 23)
    assert p.full_coeffs() == [4, -16, 23, -16, 4]
    x = F(3, 2)
    assert p(x) == (2 * x**2 - 3 * x + 2) * (2 * x**2 - 5 * x + 2)


# -- initial vectors -----------------------------------------------------------------


def test_initial_vector_log_examples():
    assert initial_vector_log(P(1, 2)).entries == (1, 2, 1, 1, 0, -1)
    assert initial_vector_log(P(1, 0, 0)).entries == (1, 0, 0, 0, 1, 2, 0, 0, 0, -2)
    assert initial_vector_log(P(4, -16, 23)).entries == (4, -16, 23, -16, 4, 8, -16, 0, 16, -8)


def half(v):
    e = v.entries
    assert e[: len(e) // 2] == e[len(e) // 2:]
    return e[: len(e) // 2]


def test_initial_vector_omega_examples():
    assert half(initial_vector_omega(P(1, 0))) == (T, RationalFunction.const(0), T.inverse())
    assert half(initial_vector_omega(P(1, 1))) == (T, RationalFunction.const(1), T.inverse())
    assert half(initial_vector_omega(P(1, 2, 3))) == (
        T * T, T * 2, RationalFunction.const(3), T.inverse() * 2, (T * T).inverse())


# -- one step --------------------------------------------------------------------------


def test_first_log_step_is_one_over_g():
    m, _ = recursion_step(initial_vector_log(P(1, 1)))
    assert m == 1
    for c in [(1, 1, 1), (3, -2, 5, 7), (2, 0, 0, 0, 1)]:
        m, _ = recursion_step(initial_vector_log(SelfReciprocalPoly(c)))
        assert m == F(1, len(c) - 1)


def test_first_log_vector_example():
    _, v = recursion_step(initial_vector_log(P(1, 1, 1)))
    assert v.entries == (2, F(3, 2), 1, F(1, 2), 4, 3, 2, 1)


def test_first_omega_step_g1():
    for c in [(1, 0), (3, -7), (F(2, 5), 11)]:
        m, _ = recursion_step(initial_vector_omega(SelfReciprocalPoly(c)))
        assert m == RationalFunction(UniPoly((1, 0, 1)), UniPoly((-1, 0, 1)))


def test_step_failures():
    with pytest.raises(StepFailure) as exc:
        recursion_step(StateVector(0, (F(1), F(0), F(-1), F(2), F(5), F(2))))
    assert exc.value.status is StepStatus.DENOMINATOR_ZERO
    with pytest.raises(StepFailure) as exc:
        recursion_step(StateVector(0, (F(1), F(-1), F(-1), F(2), F(5), F(0))))
    assert exc.value.status is StepStatus.NUMERATOR_ZERO


# -- log-mode runs -------------------------------------------------------------------------


def test_counterexample_run():
    rep = run_log(P(4, -16, 23))
    assert rep.m_values[0] == F(1, 2)
    assert rep.m_values[1] == 0
    assert rep.statuses[1] is StepStatus.NUMERATOR_ZERO
    assert (rep.verdict.kind, rep.verdict.step, rep.verdict.reason) == ("Fails", 2, "NumeratorZero")
    assert len(rep.m_values) == 2


def test_x_squared_plus_one():
    rep = run_log(P(1, 0))
    assert rep.m_values == [1, 1]
    assert rep.verdict.kind == "AllOnCircleSimple"


def test_off_circle_g1():
    rep = run_log(P(2, 5))
    assert rep.verdict.kind == "Fails"
    R = r_sequence(rep)
    assert R[2] == -9


def test_r_sequence_examples():
    assert r_sequence(run_log(P(1, 1)))[2] == 3 == F(2 * 1 + 1, 2 * 1 - 1)
    assert r_sequence(run_log(P(1, -1, 2))) == [1, 1, F(3, 5), 14, F(1, 3)]
    with pytest.raises(RNotAvailable):
        r_sequence(run_log(P(4, -16, 23)))
    # R_2 = m_2/m_3 = 0 is still defined; later values need m_1, m_0
    assert r_sequence(run_log(P(4, -16, 23)), partial=True)[2:] == [0, None, None]


@given(coeff_lists(1, 4))
def test_r1_is_one(c):
    rep = complete_log(c)
    assume(rep is not None)
    assert r_sequence(rep)[:2] == [1, 1]


@given(coeff_lists(1, 3), rationals(9, 7, nonzero=True))
def test_scale_invariance(c, alpha):
    rep = complete_log(c)
    assume(rep is not None)
    scaled = run_log(SelfReciprocalPoly([alpha * x for x in c]))
    assert r_sequence(scaled) == r_sequence(rep)


@given(coeff_lists(1, 4))
def test_lemma_identity_at_every_step(c):
    rep = run_log(SelfReciprocalPoly(c), keep_vectors=True)
    for n, m in enumerate(rep.m_values[: len(rep.vectors) - 1], start=1):
        e = rep.vectors[n].entries
        assert m == e[0] / e[len(e) // 2]


def test_m_and_r_verdicts_agree_on_random_instances():
    rng = random.Random(2024)
    agree = 0
    for _ in range(200):
        g = rng.randint(1, 4)
        c = [F(rng.randint(1, 9), rng.randint(1, 4))] + [F(rng.randint(-12, 12), rng.randint(1, 4))
                                                          for _ in range(g)]
        rep = run_log(SelfReciprocalPoly(c))
        by_m = rep.verdict.kind == "AllOnCircleSimple"
        by_r = verdict_from_r(r_sequence(rep, partial=True))
        assert by_m == by_r
        agree += 1
    assert agree == 200


# -- omega-mode runs --------------------------------------------------------------------------


def test_omega_g1_examples():
    rep = run_omega(P(1, 1))
    assert rep.m_values[0] == RationalFunction(UniPoly((1, 0, 1)), UniPoly((-1, 0, 1)))
    assert rep.verdict.kind == "AllOnCircle"
    assert run_omega(P(1, 2)).verdict.kind == "AllOnCircle"
    assert run_log(P(1, 2)).verdict.kind == "Fails"
    assert run_omega(P(2, 5)).verdict.kind == "Fails"


@given(coeff_lists(1, 4))
def test_omega_first_value_is_convention_value(c):
    p = SelfReciprocalPoly(c)
    rep = run_omega(p)
    first = rep.m_values[0]
    assert first == m_top_omega(p.g)
    R = r_sequence(rep, partial=True)
    assert R[0] == 1 and R[1] == 1


@settings(max_examples=25)
@given(coeff_lists(1, 3, bound=8))
def test_fraction_free_equals_direct(c):
    p = SelfReciprocalPoly(c)
    a = run_omega(p, stop_early=False)
    b = run_omega(p, stop_early=False, method="direct")
    assert a.m_values == b.m_values
    assert a.statuses == b.statuses
    assert a.verdict == b.verdict


@settings(max_examples=25)
@given(coeff_lists(1, 3, bound=8),
       st.fractions(min_value=F(9, 8), max_value=6, max_denominator=8))
def test_specialization_matches_symbolic(c, t0):
    p = SelfReciprocalPoly(c)
    sym = run_omega(p, stop_early=False)
    assume(all(s is StepStatus.OK for s in sym.statuses) and sym.complete)
    assume(all(m.den(t0) != 0 and m.num(t0) != 0 for m in sym.m_values))
    num = run_at(p, t0)
    assert num.m_values == [eval_at(m, t0) for m in sym.m_values]


def test_sampled_mode_is_rejection_only():
    assert run_omega_sampled(P(1, 1)).verdict.kind == "Inconclusive"
    rej = run_omega_sampled(P(2, 5))
    assert rej.verdict.kind == "Fails"
    assert len(rej.samples) == 1 and rej.samples[0] in DEFAULT_SAMPLES
    with pytest.raises(ValueError):
        run_omega_sampled(P(1, 1), samples=[1])


# -- limits ---------------------------------------------------------------------------------


def test_limit_check_examples():
    rows = limit_check(P(1, 1))
    assert rows[2]["limit"] == 3 and rows[2]["equal"]
    rows = limit_check(P(1, 0))
    assert rows[2]["limit"] == 1 and rows[2]["equal"]
    rows = limit_check(P(1, -1, 2))
    assert [r["limit"] for r in rows[2:]] == [F(3, 5), 14, F(1, 3)]
    assert all(r["equal"] for r in rows)


def reflect(f: RationalFunction) -> RationalFunction:
    """``f(1/t)`` as a reduced rational function."""
    d = max(f.num.degree, f.den.degree, 0)
    num = UniPoly(list(reversed(list(f.num.coeffs) + [0] * (d - f.num.degree))))
    den = UniPoly(list(reversed(list(f.den.coeffs) + [0] * (d - f.den.degree))))
    return RationalFunction(num, den)


@settings(max_examples=30)
@given(coeff_lists(1, 3, bound=9))
def test_r_values_are_invariant_under_t_to_inverse(c):
    # this symmetry makes R_n(c; t) even in log t, so it approaches R_n(c)
    # at rate (t - 1)^2 rather than linearly
    R = r_sequence(run_omega(SelfReciprocalPoly(c), stop_early=False), partial=True)
    for r in R:
        if isinstance(r, RationalFunction):
            assert reflect(r) == r


def test_rate_bound_near_one():
    p = P(1, -1, 2)
    R_log = r_sequence(run_log(p))
    R_om = r_sequence(run_omega(p))
    for n in range(2, 5):
        diffs = [abs(eval_at(R_om[n], 1 + F(1, 10**k)) - R_log[n]) for k in (3, 4, 5)]
        C = diffs[0] * 10**3
        assert all(d <= C * F(1, 10**k) for d, k in zip(diffs, (3, 4, 5)))
        # the ratio of successive gaps is 100 for a tenfold smaller epsilon
        assert 95 < diffs[0] / diffs[1] < 105


# -- serialization ------------------------------------------------------------------------


def test_report_json_round_trip():
    for p, runner in [(P(1, -1, 2), run_log), (P(1, 1, 1), run_omega), (P(4, -16, 23), run_log)]:
        rep = runner(p)
        data = json.loads(json.dumps(report_to_json(rep)))
        for step, m in zip(data["steps"], rep.m_values):
            if isinstance(m, RationalFunction):
                num = UniPoly([F(x) for x in step["m"]["num"]])
                den = UniPoly([F(x) for x in step["m"]["den"]])
                assert RationalFunction(num, den) == m
            elif m is not None:
                assert F(step["m"]["exact"]) == m
        assert data["verdict"]["kind"] == rep.verdict.kind
