"""State-vector recursion, the m- and R-sequences, and unit-circle verdicts.

Two scalar settings are supported:

* log mode: exact rationals with ``log q`` fixed to 1.  The m-values then
  carry a global factor ``1/log q`` relative to an arbitrary base ``q``,
  which never changes a sign, and the R-values are independent of ``q``.
* omega mode: rational functions in ``t = q**omega``.  Positivity "for every
  omega > 0" becomes positivity on the ray ``t > 1`` and is decided exactly
  with Sturm chains.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Iterable, Optional, Sequence

from .arith import (
    Infinite,
    RationalFunction,
    UniPoly,
    eval_at,
    limit_at_one,
    ray_certificate,
)
from .arith.poly import _int_primitive, int_add, int_exact_quotient, int_mul, int_sub
from .linsys import apply_step


class InvalidPolynomial(ValueError):
    pass


@dataclass(frozen=True)
class SelfReciprocalPoly:
    """``P(x) = sum_{k<g} c_k (x^{2g-k} + x^k) + c_g x^g`` with ``c_0 != 0``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) < 2:
            raise InvalidPolynomial("need at least c_0 and c_1 (g >= 1)")
        if cs[0] == 0:
            raise InvalidPolynomial("c_0 must be nonzero so that the degree is exactly 2g")
        object.__setattr__(self, "coeffs", cs)

    @property
    def g(self) -> int:
        return len(self.coeffs) - 1

    def full_coeffs(self) -> list[Fraction]:
        """All ``2g+1`` coefficients in ascending powers (a palindrome)."""
        c = list(self.coeffs)
        return c + c[-2::-1]

    def to_unipoly(self) -> UniPoly:
        return UniPoly(self.full_coeffs())

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.full_coeffs()):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class StateVector:
    n: int
    entries: tuple

    @property
    def k(self) -> int:
        """Index ``2g - n`` of the step that consumes this vector, plus one."""
        return len(self.entries) // 2 - 1


class Mode(str, enum.Enum):
    LOG = "LogQ"
    OMEGA = "Omega"


class StepStatus(str, enum.Enum):
    OK = "OK"
    NUMERATOR_ZERO = "NumeratorZero"
    DENOMINATOR_ZERO = "DenominatorZero"
    NON_POSITIVE = "NonPositive"


@dataclass(frozen=True)
class Verdict:
    kind: str  # AllOnCircleSimple | AllOnCircle | Fails | Inconclusive
    step: Optional[int] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.kind in ("AllOnCircleSimple", "AllOnCircle")

    def __str__(self) -> str:
        if self.kind == "Fails":
            return f"Fails(step {self.step}, {self.reason})"
        return self.kind


class StepFailure(ArithmeticError):
    def __init__(self, step: int, status: StepStatus, numerator=None):
        super().__init__(f"step {step}: {status.value}")
        self.step = step
        self.status = status
        self.numerator = numerator


class RNotAvailable(ArithmeticError):
    def __init__(self, step: int):
        super().__init__(f"R_{step} is not available (undefined or zero m-value)")
        self.step = step


@dataclass
class CriterionReport:
    """Outcome of one run of the recursion.

    ``m_values[n-1]`` is ``m_{2g-n}`` for the steps that were reached; a
    ``NumeratorZero`` step stores the exact zero, a ``DenominatorZero`` step
    stores ``None``.  ``m_top`` is the convention value ``m_{2g}``.
    """

    poly: SelfReciprocalPoly
    mode: Mode
    m_top: Any
    m_values: list = field(default_factory=list)
    statuses: list = field(default_factory=list)
    vectors: list = field(default_factory=list)
    verdict: Verdict = Verdict("Inconclusive")
    certificates: list = field(default_factory=list)
    samples: tuple = ()

    @property
    def g(self) -> int:
        return self.poly.g

    @property
    def complete(self) -> bool:
        return len(self.m_values) == 2 * self.g and all(v is not None for v in self.m_values)

    def m(self, j: int):
        """``m_j`` for ``0 <= j <= 2g`` (``None`` if not reached or infinite)."""
        if j == 2 * self.g:
            return self.m_top
        n = 2 * self.g - j
        if n - 1 < len(self.m_values):
            return self.m_values[n - 1]
        return None


# -- initial vectors ----------------------------------------------------------


def initial_vector_log(p: SelfReciprocalPoly) -> StateVector:
    """``v_g(0)`` with ``log q = 1``: the coefficients, then ``(g-k) c_k``."""
    g = p.g
    full = p.full_coeffs()
    second = [(g - k) * full[k] for k in range(2 * g + 1)]
    return StateVector(0, tuple(full + second))


def initial_vector_omega(p: SelfReciprocalPoly) -> StateVector:
    """``v_g(0)`` over ``Q(t)``: both halves are ``c_k t^{g-k}``."""
    g = p.g
    full = p.full_coeffs()
    half = [RationalFunction.laurent(full[k], g - k) for k in range(2 * g + 1)]
    return StateVector(0, tuple(half + half))


def initial_vector_at(p: SelfReciprocalPoly, t0) -> StateVector:
    """The omega-mode initial vector specialized at a rational ``t0 > 0``."""
    g = p.g
    t0 = Fraction(t0)
    full = p.full_coeffs()
    half = [full[k] * t0 ** (g - k) for k in range(2 * g + 1)]
    return StateVector(0, tuple(half + half))


def m_top_log(g: int) -> Fraction:
    return Fraction(1, g)


def m_top_omega(g: int) -> RationalFunction:
    """``(t^g + t^-g)/(t^g - t^-g) = (t^{2g}+1)/(t^{2g}-1)``."""
    num = UniPoly.monomial(2 * g) + 1
    den = UniPoly.monomial(2 * g) - 1
    return RationalFunction(num, den)


def m_top_at(g: int, t0) -> Fraction:
    t2 = Fraction(t0) ** (2 * g)
    return (t2 + 1) / (t2 - 1)


# -- one step -------------------------------------------------------------------


def _is_zero(x) -> bool:
    return x == 0


def recursion_step(v: StateVector):
    """Advance ``v_g(n-1)`` to ``v_g(n)``; returns ``(m_{2g-n}, v_g(n))``.

    Raises :class:`StepFailure` when the defining ratio has a zero numerator
    (``P`` would be singular) or a zero denominator.
    """
    e = v.entries
    k = len(e) // 2 - 2
    if k < 0 or len(e) % 2:
        raise ValueError("state vector too short to advance")
    n = v.n + 1
    num = e[0] + e[k + 1]
    den = e[k + 2] - e[2 * k + 3]
    if _is_zero(den):
        raise StepFailure(n, StepStatus.DENOMINATOR_ZERO, numerator=num)
    if _is_zero(num):
        raise StepFailure(n, StepStatus.NUMERATOR_ZERO, numerator=num)
    m = num / den
    nxt = apply_step(k, m, e)
    if nxt[0] != m * nxt[k + 1]:
        raise ArithmeticError(f"consistency identity failed at step {n}")
    return m, StateVector(n, tuple(nxt))


def _run(p, v0, m_top, mode, keep_vectors, sign_of, stop_on_bad=False):
    report = CriterionReport(poly=p, mode=mode, m_top=m_top)
    if keep_vectors:
        report.vectors.append(v0)
    v = v0
    first_bad: Optional[Verdict] = None
    for _ in range(2 * p.g):
        try:
            m, v = recursion_step(v)
        except StepFailure as exc:
            if exc.status is StepStatus.NUMERATOR_ZERO:
                report.m_values.append(exc.numerator)
            else:
                report.m_values.append(None)
            report.statuses.append(exc.status)
            if first_bad is None:
                first_bad = Verdict("Fails", exc.step, exc.status.value)
            break
        report.m_values.append(m)
        if keep_vectors:
            report.vectors.append(v)
        ok = sign_of(m, report)
        if ok:
            report.statuses.append(StepStatus.OK)
        else:
            report.statuses.append(StepStatus.NON_POSITIVE)
            if first_bad is None:
                first_bad = Verdict("Fails", v.n, StepStatus.NON_POSITIVE.value)
            if stop_on_bad:
                break
    report.verdict = first_bad
    return report


def run_log(p: SelfReciprocalPoly, keep_vectors: bool = False) -> CriterionReport:
    """Exact log-mode run; decides "all zeros on the circle and simple"."""
    report = _run(
        p,
        initial_vector_log(p),
        m_top_log(p.g),
        Mode.LOG,
        keep_vectors,
        lambda m, _r: m > 0,
    )
    if report.verdict is None:
        report.verdict = Verdict("AllOnCircleSimple")
    return report


def _omega_sign(m: RationalFunction, report: CriterionReport) -> bool:
    cert = ray_certificate(m)
    report.certificates.append(cert)
    return bool(cert.get("positive"))


def run_omega(
    p: SelfReciprocalPoly,
    keep_vectors: bool = False,
    stop_early: bool = True,
    method: str = "fraction_free",
) -> CriterionReport:
    """Exact omega-mode run over ``Q(t)``; decides "all zeros on the circle".

    Each ``m_{2g-n}(t)`` must be finite and positive for every ``t > 1``.
    Because ``num*den`` of ``m`` and of ``1/m`` are the same polynomial, one
    certificate covers ``m`` and its reciprocal.  By default the run halts at
    the first failing step; ``stop_early=False`` keeps going and certifies
    each later ``m`` directly, which can be slow for large ``g``.

    ``method="direct"`` applies the step matrices to a vector of rational
    functions.  The default ``"fraction_free"`` uses the equivalent
    polynomial recursion of :func:`omega_ratios`, which is much faster; the
    two agree exactly and the test-suite checks this.
    """
    if method == "direct":
        report = _run(
            p,
            initial_vector_omega(p),
            m_top_omega(p.g),
            Mode.OMEGA,
            keep_vectors,
            _omega_sign,
            stop_on_bad=stop_early,
        )
        if report.verdict is None:
            report.verdict = Verdict("AllOnCircle")
        return report
    if method != "fraction_free":
        raise ValueError(f"unknown method {method!r}")
    if keep_vectors:
        raise ValueError("state vectors are only kept by the direct method")
    report = CriterionReport(poly=p, mode=Mode.OMEGA, m_top=m_top_omega(p.g))
    m = RationalFunction.const(1)
    first_bad: Optional[Verdict] = None
    for n, rho in enumerate(omega_ratios(p), start=1):
        if isinstance(rho, StepFailure):
            report.m_values.append(rho.numerator)
            report.statuses.append(rho.status)
            if first_bad is None:
                first_bad = Verdict("Fails", n, rho.status.value)
            break
        m = m * rho
        report.m_values.append(m)
        # while every earlier m is positive on the ray, m_{2g-n} is positive
        # exactly when the ratio m_{2g-n}/m_{2g-n+1} is
        target = rho if first_bad is None else m
        cert = ray_certificate(target)
        cert["checked"] = "ratio" if first_bad is None else "m"
        report.certificates.append(cert)
        if cert["positive"]:
            report.statuses.append(StepStatus.OK)
        else:
            report.statuses.append(StepStatus.NON_POSITIVE)
            if first_bad is None:
                first_bad = Verdict("Fails", n, StepStatus.NON_POSITIVE.value)
            if stop_early:
                break
    report.verdict = first_bad or Verdict("AllOnCircle")
    return report


def omega_ratios(p: SelfReciprocalPoly):
    """Yield ``m_{2g-n}(t) / m_{2g-n+1}(t)`` for ``n = 1..2g`` (with ``m_{2g+1} := 1``).

    After every step the top half of the state vector equals ``m`` times the
    bottom half, and in omega mode this already holds for ``v_g(0)`` with
    factor 1.  Writing the bottom half as ``b_0..b_K`` the step reduces to

        ratio = (b_0 + b_K) / (b_0 - b_K),   b'_i = b_0 b_i - b_K b_{K-i},

    up to a common scalar factor that cancels in every ratio.  The rows are
    kept as integer polynomials; from the third row on, each new row is
    exactly divisible by the leading entry of the row two steps back, which
    keeps degrees growing linearly.  A zero numerator or denominator yields
    a :class:`StepFailure` instance and ends the sequence.
    """
    g = p.g
    full = p.full_coeffs()
    den = 1
    for c in full:
        den = den * c.denominator // gcd(den, c.denominator)
    row = [_monomial_int(2 * g - k, int(full[k] * den)) for k in range(2 * g + 1)]
    rows = [row]
    for n in range(1, 2 * g + 1):
        K = len(row) - 1
        num = int_add(row[0], row[K])
        dnm = int_sub(row[0], row[K])
        if not dnm:
            yield StepFailure(n, StepStatus.DENOMINATOR_ZERO, numerator=RationalFunction(UniPoly(num)))
            return
        if not num:
            yield StepFailure(n, StepStatus.NUMERATOR_ZERO, numerator=RationalFunction.const(0))
            return
        yield RationalFunction(UniPoly(num), UniPoly(dnm))
        if K == 1:
            return
        nxt = [int_sub(int_mul(row[0], row[i]), int_mul(row[K], row[K - i])) for i in range(K)]
        if len(rows) >= 3:
            pivot = _int_primitive(list(rows[-2][0]))
            nxt = [int_exact_quotient(e, pivot) if e else [] for e in nxt]
        cont = 0
        for e in nxt:
            for x in e:
                cont = gcd(cont, x)
        if cont > 1:
            nxt = [[x // cont for x in e] for e in nxt]
        rows.append(nxt)
        row = nxt


def _monomial_int(k: int, c: int) -> list[int]:
    return [0] * k + [c] if c else []


def run_at(p: SelfReciprocalPoly, t0, keep_vectors: bool = False) -> CriterionReport:
    """Omega-mode recursion specialized at one rational ``t0 > 1``."""
    report = _run(
        p,
        initial_vector_at(p, t0),
        m_top_at(p.g, t0),
        Mode.OMEGA,
        keep_vectors,
        lambda m, _r: m > 0,
    )
    report.samples = (Fraction(t0),)
    if report.verdict is None:
        report.verdict = Verdict("AllOnCircle")
    return report


DEFAULT_SAMPLES = (Fraction(3, 2), Fraction(2), Fraction(3), Fraction(5))


def run_omega_sampled(p: SelfReciprocalPoly, samples: Sequence = DEFAULT_SAMPLES) -> CriterionReport:
    """Rejection-only omega check at finitely many ``t > 1``.

    A failing sample proves that some zero is off the circle; passing every
    sample proves nothing, so the verdict is then ``Inconclusive``.
    """
    samples = tuple(Fraction(s) for s in samples)
    if any(s <= 1 for s in samples):
        raise ValueError("sample points must satisfy t > 1")
    last = None
    for s in samples:
        rep = run_at(p, s)
        rep.samples = samples
        if not rep.verdict.passed:
            rep.samples = (s,)
            return rep
        last = rep
    if last is None:
        last = CriterionReport(poly=p, mode=Mode.OMEGA, m_top=None)
    last.verdict = Verdict("Inconclusive")
    last.samples = samples
    return last


# -- R-sequence -------------------------------------------------------------------


def r_sequence(report: CriterionReport, partial: bool = False) -> list:
    """``R_0 .. R_{2g}`` from the alternating products of consecutive m-values.

    Also checks ``m_{2g-n} = m_{2g} R_{n-1} R_n`` for every available ``n``.
    With ``partial`` the list holds ``None`` where ``R_n`` is unavailable;
    otherwise the first gap raises :class:`RNotAvailable`.
    """
    g = report.g
    R: list = [Fraction(1)]
    for n in range(1, 2 * g + 1):
        try:
            R.append(_r_value(report, n))
        except RNotAvailable:
            if not partial:
                raise
            R.append(None)
    for n in range(1, 2 * g + 1):
        if R[n] is None or R[n - 1] is None:
            continue
        if report.m(2 * g - n) != report.m_top * R[n - 1] * R[n]:
            raise ArithmeticError(f"m/R relation fails at n = {n}")
    return R


def _r_value(report: CriterionReport, n: int):
    g = report.g
    if n > len(report.m_values):
        raise RNotAvailable(n)
    J, odd = divmod(n - 1, 2)
    acc = None
    for j in range(J + 1):
        if odd == 0:
            hi, lo = 2 * g - (2 * j + 1), 2 * g - 2 * j
        else:
            hi, lo = 2 * g - (2 * j + 2), 2 * g - (2 * j + 1)
        num, den = report.m(hi), report.m(lo)
        if num is None or den is None or den == 0:
            raise RNotAvailable(n)
        term = num / den
        acc = term if acc is None else acc * term
    return acc


# -- consistency with the m verdict, limits ------------------------------------------------


def verdict_from_r(R: Sequence) -> bool:
    """All ``R_n`` finite and positive (the R-form of the log criterion)."""
    return all(r is not None and r > 0 for r in R)


def limit_check(p: SelfReciprocalPoly, omega_report=None, log_report=None) -> list[dict]:
    """Compare ``lim_{t->1+} R_n(c;t)`` with the log-mode ``R_n(c)``."""
    log_report = log_report or run_log(p)
    omega_report = omega_report or run_omega(p)
    R_log = r_sequence(log_report, partial=True)
    R_om = r_sequence(omega_report, partial=True)
    rows = []
    for n in range(2 * p.g + 1):
        lim = None
        if R_om[n] is not None:
            lim = limit_at_one(R_om[n]) if isinstance(R_om[n], RationalFunction) else R_om[n]
        log_val = R_log[n]
        equal = None
        if lim is not None and log_val is not None and not isinstance(lim, Infinite):
            equal = lim == log_val
        rows.append({"n": n, "limit": lim, "log_value": log_val, "equal": equal})
    return rows


def eval_r_at(R: Sequence, t0) -> list:
    """Evaluate a symbolic R-sequence at ``t0``."""
    out = []
    for r in R:
        if r is None:
            out.append(None)
        elif isinstance(r, RationalFunction):
            out.append(eval_at(r, t0))
        else:
            out.append(Fraction(r))
    return out


# -- serialization ------------------------------------------------------------------


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_json(x) -> Any:
    """Exact JSON rendering: ``{"exact": "p/q", "decimal": float}`` or a rational function."""
    if x is None:
        return None
    if isinstance(x, Infinite):
        return {"exact": str(x), "decimal": None}
    if isinstance(x, RationalFunction):
        return {
            "num": [fraction_str(c) for c in x.num.coeffs] or ["0"],
            "den": [fraction_str(c) for c in x.den.coeffs],
            "text": str(x),
        }
    x = Fraction(x)
    return {"exact": fraction_str(x), "decimal": float(x)}


def report_to_json(report: CriterionReport, with_r: bool = True) -> dict:
    g = report.g
    steps = []
    for i, (m, st) in enumerate(zip(report.m_values, report.statuses)):
        n = i + 1
        row = {"n": n, "index": 2 * g - n, "status": st.value, "m": scalar_json(m)}
        if report.certificates and i < len(report.certificates):
            cert = dict(report.certificates[i])
            if cert.get("value_at_2") is not None:
                cert["value_at_2"] = fraction_str(cert["value_at_2"])
            row["sturm"] = cert
        steps.append(row)
    out = {
        "mode": report.mode.value,
        "g": g,
        "coeffs": [fraction_str(c) for c in report.poly.coeffs],
        "m_top": scalar_json(report.m_top),
        "steps": steps,
        "verdict": {
            "kind": report.verdict.kind,
            "step": report.verdict.step,
            "reason": report.verdict.reason,
        },
    }
    if report.samples:
        out["samples"] = [fraction_str(s) for s in report.samples]
    if with_r:
        R = r_sequence(report, partial=True) if report.m_top is not None else []
        out["r_sequence"] = [scalar_json(r) for r in R]
    return out
