"""Floating-point canonical-system objects attached to a self-reciprocal polynomial.

The exact recursion supplies the state vectors ``v_g(n)`` and the step values
``m_{2g-n}``; this module turns them into the functions ``A_q(a, z)``,
``B_q(a, z)`` on ``[1, q^g)``, the diagonal Hamiltonian ``diag(1/m, m)``, the
rotation-product representation, the kernel ``K`` and an exact Gaussian
rational factorization of ``P``.

Exact log-mode values are computed with ``log q = 1``.  When a concrete
``q > 1`` is chosen, second-half vector entries are multiplied by ``log q``
and step values are divided by ``log q``.
"""

from __future__ import annotations

import cmath
import csv
import io
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import GaussianRational
from .criterion import SelfReciprocalPoly, StepStatus, run_log
from .kernels import rotation_product, simpson_kernel, trig_pair
from .linsys import apply_step

DEFAULT_Q = 2.0
ORDER_STEPS = (1e-3, 5e-4)


class OutOfDomain(ValueError):
    """``a`` lies outside ``[1, q^g)`` or past the first singular step."""


class IntervalError(ValueError):
    """A finite-difference stencil straddles a Hamiltonian breakpoint."""


class NotApplicable(ArithmeticError):
    """The check needs every step value defined (and, where stated, positive)."""


class ConfluentNotSupported(ValueError):
    """``K(a; z, w)`` with ``z == conj(w)`` needs a derivative formula."""


def _vec_rel(x: Sequence[complex], y: Sequence[complex]) -> float:
    """``|x - y| / max(|x|, |y|)`` for complex vectors; 0 when both vanish."""
    diff = math.sqrt(sum(abs(a - b) ** 2 for a, b in zip(x, y)))
    scale = max(math.sqrt(sum(abs(a) ** 2 for a in x)), math.sqrt(sum(abs(b) ** 2 for b in y)))
    if scale == 0:
        return diff
    return diff / scale


# -- entire functions -------------------------------------------------------------


@dataclass(frozen=True)
class ExpPolyFunctions:
    """``A_q``, ``B_q``, ``E_q`` and ``E_q^#`` as explicit cosine/sine sums."""

    coeffs: tuple
    q: float = DEFAULT_Q

    def __post_init__(self):
        if not self.q > 1:
            raise ValueError("q must exceed 1")

    @property
    def g(self) -> int:
        return len(self.coeffs) - 1

    @property
    def log_q(self) -> float:
        return math.log(self.q)

    def A(self, z: complex) -> complex:
        g, L = self.g, self.log_q
        acc = complex(self.coeffs[g])
        for k in range(g):
            acc += 2 * float(self.coeffs[k]) * cmath.cos((g - k) * z * L)
        return acc

    def B(self, z: complex) -> complex:
        """``-dA/dz`` summed term by term."""
        g, L = self.g, self.log_q
        acc = 0j
        for k in range(g):
            acc += 2 * float(self.coeffs[k]) * (g - k) * L * cmath.sin((g - k) * z * L)
        return acc

    def E(self, z: complex) -> complex:
        return self.A(z) - 1j * self.B(z)

    def E_sharp(self, z: complex) -> complex:
        return self.A(z) + 1j * self.B(z)

    def A_via_poly(self, z: complex) -> complex:
        """``q^{-giz} P(q^{iz})``, an independent path to ``A_q``."""
        g, L = self.g, self.log_q
        x = cmath.exp(1j * z * L)
        full = list(self.coeffs) + list(self.coeffs[-2::-1])
        acc = 0j
        for c in reversed(full):
            acc = acc * x + float(c)
        return cmath.exp(-1j * g * z * L) * acc


@dataclass(frozen=True)
class OmegaFunctions:
    """The shifted family ``E_{q,w}(z) = A_q(z + i w)`` with its real and odd parts."""

    base: ExpPolyFunctions
    omega: float

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError("omega must be positive")

    @property
    def t(self) -> float:
        return self.base.q ** self.omega

    def E(self, z: complex) -> complex:
        return self.base.A(z + 1j * self.omega)

    def E_sharp(self, z: complex) -> complex:
        return self.base.A(z - 1j * self.omega)

    def A(self, z: complex) -> complex:
        """``sum c_{g-k} (t^k + t^-k) cos(k z log q) + c_g``."""
        b, t = self.base, self.t
        g, L = b.g, b.log_q
        acc = complex(b.coeffs[g])
        for k in range(1, g + 1):
            acc += float(b.coeffs[g - k]) * (t**k + t**-k) * cmath.cos(k * z * L)
        return acc

    def B(self, z: complex) -> complex:
        """``sum c_{g-k} (t^k - t^-k) sin(k z log q)``."""
        b, t = self.base, self.t
        g, L = b.g, b.log_q
        acc = 0j
        for k in range(1, g + 1):
            acc += float(b.coeffs[g - k]) * (t**k - t**-k) * cmath.sin(k * z * L)
        return acc


# -- Hamiltonian ----------------------------------------------------------------


@dataclass(frozen=True)
class Hamiltonian:
    """``H(a) = diag(1/m(a), m(a))`` with ``m = m_{2g-n}`` on ``[q^{(n-1)/2}, q^{n/2})``."""

    g: int
    q: float
    m: tuple  # m[n-1] = m_{2g-n} as a float, for the defined steps

    def breakpoints(self) -> list[float]:
        return [self.q ** (n / 2) for n in range(2 * self.g + 1)]

    def steps(self) -> list[tuple[float, float, float]]:
        bp = self.breakpoints()
        return [(bp[n - 1], bp[n], self.m[n - 1]) for n in range(1, len(self.m) + 1)]

    def positive_semidefinite(self) -> bool:
        return len(self.m) == 2 * self.g and all(x > 0 for x in self.m)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "a_start", "a_end", "m"])
        for n, (lo, hi, m) in enumerate(self.steps(), start=1):
            w.writerow([n, repr(lo), repr(hi), repr(m)])
        return buf.getvalue()


# -- the canonical system ------------------------------------------------------------


def rotation_factor(theta: float, m: float, z: complex) -> list[list[complex]]:
    c, s = cmath.cos(z * theta), cmath.sin(z * theta)
    return [[c, -m * s], [s / m, c]]


@dataclass
class CanonicalSystem:
    """Piecewise data ``(v_g(n), m_{2g-n})`` for ``n = 1 .. n_defined`` plus ``E(0)``.

    ``vectors[n-1]`` is ``(va, vb)``: the two halves of ``v_g(n)`` in floating
    point; entry ``j`` multiplies ``cos`` or ``sin`` of ``z (k_j log q - log a)``
    with ``k_j = g - j``.
    """

    g: int
    q: float
    vectors: list
    m: list
    e0: float
    functions: object
    label: str = "log"
    singular_step: Optional[int] = None

    @property
    def log_q(self) -> float:
        return math.log(self.q)

    @property
    def hamiltonian(self) -> Hamiltonian:
        return Hamiltonian(self.g, self.q, tuple(self.m))

    @property
    def n_defined(self) -> int:
        return len(self.vectors)

    @property
    def all_positive(self) -> bool:
        return self.n_defined == 2 * self.g and all(x > 0 for x in self.m)

    def _kvals(self, n: int) -> list[float]:
        return [float(self.g - j) for j in range(2 * self.g - n + 1)]

    def interval_of(self, a: float) -> int:
        if not (a >= 1 and a < self.q**self.g):
            raise OutOfDomain(f"a = {a} is outside [1, q^g) = [1, {self.q ** self.g})")
        n = int(math.floor(2 * math.log(a) / self.log_q)) + 1
        n = min(max(n, 1), 2 * self.g)
        # guard against rounding right at a breakpoint
        if a < self.q ** ((n - 1) / 2):
            n -= 1
        elif a >= self.q ** (n / 2) and n < 2 * self.g:
            n += 1
        return n

    def _check_defined(self, n: int) -> None:
        if n > self.n_defined:
            raise OutOfDomain(
                f"interval {n} lies past the first singular step (step {self.singular_step})"
            )

    def eval_on(self, n: int, a: float, z: complex) -> tuple[complex, complex]:
        """``(A, B)`` from the data of interval ``n`` (used for one-sided limits)."""
        self._check_defined(n)
        va, vb = self.vectors[n - 1]
        return trig_pair(va, vb, self._kvals(n), self.log_q, math.log(a), complex(z))

    def eval_AB(self, a: float, z: complex) -> tuple[complex, complex]:
        """``(A_q(a, z), B_q(a, z)) = 1/2 diag(1, -i) T_n(a, z) v_g(n)``."""
        return self.eval_on(self.interval_of(a), a, z)

    def end_limit(self, z: complex = 0) -> tuple[complex, complex]:
        """The limit of ``(A, B)(a, z)`` as ``a`` increases to ``q^g``."""
        return self.eval_on(2 * self.g, self.q**self.g, z)

    def ode_residual(self, a: float, z: complex, h: float = 1e-4) -> float:
        """Relative defect of ``-a d/da (A, B) = z J H(a) (A, B)`` by central differences."""
        n = self.interval_of(a)
        lo, hi = self.q ** ((n - 1) / 2), self.q ** (n / 2)
        if not (lo < a - h and a + h < hi):
            raise IntervalError(f"[a-h, a+h] leaves the interval ({lo}, {hi})")
        m = self.m[n - 1]
        if m == 0:
            raise NotApplicable("step value is zero")
        Ap, Bp = self.eval_on(n, a + h, z)
        Am, Bm = self.eval_on(n, a - h, z)
        A, B = self.eval_on(n, a, z)
        lhs = (-a * (Ap - Am) / (2 * h), -a * (Bp - Bm) / (2 * h))
        rhs = (z * (-m * B), z * (A / m))
        return _vec_rel(lhs, rhs)

    # -- transfer product --

    def transfer_factors(self, a: float) -> tuple[list[float], list[float]]:
        """Angles and step values of the rotation factors from ``a`` to ``q^g``."""
        if not self.all_positive:
            raise NotApplicable("transfer product needs every step value positive")
        n = self.interval_of(a)
        L = self.log_q
        thetas = [math.log(self.q ** (n / 2) / a)]
        ms = [self.m[n - 1]]
        for k in range(1, 2 * self.g - n + 1):
            thetas.append(0.5 * L)
            ms.append(self.m[n + k - 1])
        return thetas, ms

    def transfer_product(self, a: float, z: complex) -> tuple[complex, complex]:
        """``E(0) R(log(q^{n/2}/a), m_{2g-n}) prod_k R(log q / 2, m_{2g-n-k}) (1, 0)^T``."""
        thetas, ms = self.transfer_factors(a)
        x, y = rotation_product(thetas, ms, complex(z))
        return self.e0 * x, self.e0 * y

    def factor_determinants(self, a: float, z: complex) -> list[complex]:
        thetas, ms = self.transfer_factors(a)
        out = []
        for th, m in zip(thetas, ms):
            R = rotation_factor(th, m, complex(z))
            out.append(R[0][0] * R[1][1] - R[0][1] * R[1][0])
        return out

    # -- kernel --

    def kernel_K(self, a: float, z: complex, w: complex) -> complex:
        """``(conj A(a,w) B(a,z) - conj B(a,w) A(a,z)) / (pi (z - conj w))``."""
        z, w = complex(z), complex(w)
        if z == w.conjugate():
            raise ConfluentNotSupported("z equals conj(w)")
        Az, Bz = self.eval_AB(a, z)
        Aw, Bw = self.eval_AB(a, w)
        return (Aw.conjugate() * Bz - Bw.conjugate() * Az) / (math.pi * (z - w.conjugate()))

    def kernel_integral(self, a1: float, a2: float, z: complex, w: complex,
                        tol: float = 1e-9) -> complex:
        """``(1/pi) int_{a1}^{a2} [conj A(w) A(z) / m + conj B(w) B(z) m] da / a``,
        split at the breakpoints and integrated in ``log a`` step by step."""
        if a2 < a1:
            return -self.kernel_integral(a2, a1, z, w, tol)
        if a1 == a2:
            return 0j
        n1, n2 = self.interval_of(a1), self.interval_of(a2)
        L = self.log_q
        total = 0j
        for n in range(n1, n2 + 1):
            self._check_defined(n)
            lo = max(math.log(a1), (n - 1) / 2 * L)
            hi = min(math.log(a2), n / 2 * L)
            if hi <= lo:
                continue
            va, vb = self.vectors[n - 1]
            total += simpson_kernel(va, vb, self._kvals(n), L, self.m[n - 1],
                                    complex(z), complex(w), lo, hi, tol)
        return total / math.pi

    def kernel_identity_residual(self, a1: float, a2: float, z: complex, w: complex) -> float:
        lhs = self.kernel_K(a1, z, w) - self.kernel_K(a2, z, w)
        rhs = self.kernel_integral(a1, a2, z, w)
        return _vec_rel([lhs], [rhs])


# -- construction ---------------------------------------------------------------------


def from_log_report(p: SelfReciprocalPoly, q: float = DEFAULT_Q, report=None) -> CanonicalSystem:
    """Instantiate the log-mode system at ``q`` from exact values computed at ``log q = 1``."""
    if report is None or not report.vectors:
        report = run_log(p, keep_vectors=True)
    L = math.log(q)
    vectors, ms = [], []
    singular = None
    for i, st in enumerate(report.statuses):
        m = report.m_values[i]
        if st in (StepStatus.NUMERATOR_ZERO, StepStatus.DENOMINATOR_ZERO) or m is None or m == 0:
            singular = i + 1
            break
        v = report.vectors[i + 1].entries
        h = len(v) // 2
        vectors.append(([float(x) for x in v[:h]], [float(x) * L for x in v[h:]]))
        ms.append(float(m) / L)
    return CanonicalSystem(
        g=p.g, q=q, vectors=vectors, m=ms, e0=float(p(Fraction(1))),
        functions=ExpPolyFunctions(tuple(p.coeffs), q), label="log", singular_step=singular,
    )


def omega_objects(p: SelfReciprocalPoly, q: float = DEFAULT_Q, omega: float = 0.5) -> CanonicalSystem:
    """The shifted system: the omega-mode recursion run in floating point at ``t = q^omega``."""
    if not omega > 0:
        raise ValueError("omega must be positive")
    funcs = OmegaFunctions(ExpPolyFunctions(tuple(p.coeffs), q), float(omega))
    t = funcs.t
    g = p.g
    full = [float(c) for c in p.full_coeffs()]
    half = [full[k] * t ** (g - k) for k in range(2 * g + 1)]
    e = half + half
    vectors, ms = [], []
    singular = None
    for n in range(1, 2 * g + 1):
        k = len(e) // 2 - 2
        num = e[0] + e[k + 1]
        den = e[k + 2] - e[2 * k + 3]
        if num == 0 or den == 0:
            singular = n
            break
        m = num / den
        e = apply_step(k, m, e)
        h = len(e) // 2
        vectors.append((list(e[:h]), list(e[h:])))
        ms.append(m)
    return CanonicalSystem(
        g=g, q=q, vectors=vectors, m=ms, e0=funcs.E(0).real, functions=funcs,
        label=f"omega={omega}", singular_step=singular,
    )


# -- exact factorization ---------------------------------------------------------------


def factorization_product(p: SelfReciprocalPoly, m_values: Sequence[Fraction], x) -> GaussianRational:
    """``P(1)/2^{2g} [1 0] prod_n [[x+1, i m (x-1)], [-i/m (x-1), x+1]] [1 0]^T``
    with ``m = m_{2g-n}`` for ``n = 1 .. 2g``."""
    g = p.g
    if len(m_values) != 2 * g or any(m is None or m == 0 for m in m_values):
        raise NotApplicable("factorization needs all 2g step values defined and nonzero")
    x = Fraction(x)
    i = GaussianRational.i()
    one, zero = GaussianRational(1), GaussianRational(0)
    row = [one, zero]
    for m in m_values:
        m = Fraction(m)
        M = [[GaussianRational(x + 1), i * (m * (x - 1))],
             [-(i * ((x - 1) / m)), GaussianRational(x + 1)]]
        row = [row[0] * M[0][0] + row[1] * M[1][0], row[0] * M[0][1] + row[1] * M[1][1]]
    return row[0] * (p(Fraction(1)) / Fraction(2) ** (2 * g))


def factorization_identity(p: SelfReciprocalPoly, m_values: Sequence[Fraction], x) -> bool:
    """Exact equality of the product above with ``P(x)``."""
    return factorization_product(p, m_values, x) == GaussianRational(p(Fraction(x)))


# -- verification battery --------------------------------------------------------------


@dataclass
class Check:
    name: str
    inputs: dict
    residual: Optional[float]
    tolerance: Optional[float]
    passed: Optional[bool]
    skipped: Optional[str] = None
    kind: str = "check"

    def to_json(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "inputs": self.inputs,
               "residual": self.residual, "tolerance": self.tolerance, "passed": self.passed}
        if self.skipped is not None:
            out["skipped"] = self.skipped
        return out


@dataclass
class BatteryReport:
    checks: list = field(default_factory=list)

    def add(self, name, inputs, residual, tol, kind="check"):
        residual = float(residual)
        self.checks.append(Check(name, inputs, residual, tol, residual <= tol, kind=kind))

    def skip(self, name, reason):
        self.checks.append(Check(name, {}, None, None, None, skipped=reason))

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)


def _cplx(z: complex) -> list[float]:
    return [z.real, z.imag]


def _random_z(rng: random.Random, upper: bool = False) -> complex:
    im = rng.uniform(0.1, 1.0) if upper else rng.uniform(-1.0, 1.0)
    return complex(rng.uniform(-3.0, 3.0), im)


def _interior_point(rng: random.Random, sysm: CanonicalSystem, n: int) -> float:
    L = sysm.log_q
    frac = rng.uniform(0.2, 0.8)
    return math.exp(((n - 1) / 2 + frac / 2) * L)


def system_checks(sysm: CanonicalSystem, rep: BatteryReport, rng: random.Random,
                  n_z: int = 20, prefix: str = "") -> None:
    """Boundary, continuity, end limit, ODE, transfer product and factor determinants."""
    f = sysm.functions
    g = sysm.g
    if sysm.n_defined < 2 * g:
        rep.skip(prefix + "canonical",
                 f"singular step {sysm.singular_step}: objects are undefined past it")
        return
    for _ in range(n_z):
        z = _random_z(rng)
        got = sysm.eval_AB(1.0, z)
        rep.add(prefix + "boundary_a1", {"z": _cplx(z)}, _vec_rel(got, (f.A(z), f.B(z))), 1e-10)
    z = _random_z(rng)
    for n in range(1, 2 * g):
        a = sysm.q ** (n / 2)
        left = sysm.eval_on(n, a, z)
        right = sysm.eval_on(n + 1, a, z)
        rep.add(prefix + "continuity", {"breakpoint": n, "z": _cplx(z)}, _vec_rel(left, right), 1e-9)
    A_end, B_end = sysm.end_limit(z)
    end0 = sysm.end_limit(0)
    rep.add(prefix + "end_limit", {"z": 0}, _vec_rel(end0, (f.A(0), 0j)), 1e-9)
    rep.add(prefix + "end_limit_B", {"z": _cplx(z)}, abs(B_end) / max(abs(A_end), 1.0), 1e-9)
    for n in range(1, 2 * g + 1):
        a = _interior_point(rng, sysm, n)
        z = complex(rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3))
        r = sysm.ode_residual(a, z, 1e-4)
        rep.add(prefix + "ode_residual", {"a": a, "z": _cplx(z), "h": 1e-4}, r, 1e-6)
        # the order is measured where truncation error dominates rounding;
        # near h = 1e-4 the two are within a factor of ten of each other
        r1 = sysm.ode_residual(a, z, ORDER_STEPS[0])
        r2 = sysm.ode_residual(a, z, ORDER_STEPS[1])
        ratio = r1 / r2 if r2 > 0 else float("inf")
        rep.add(prefix + "ode_order", {"a": a, "z": _cplx(z), "h": list(ORDER_STEPS), "ratio": ratio},
                abs(ratio - 4.0), 0.5)
    if not sysm.all_positive:
        rep.skip(prefix + "transfer_product", "some step value is not positive")
        return
    for _ in range(10):
        a = math.exp(rng.uniform(0.0, g * sysm.log_q * 0.999))
        z = _random_z(rng)
        got = sysm.transfer_product(a, z)
        rep.add(prefix + "transfer_product", {"a": a, "z": _cplx(z)},
                _vec_rel(got, sysm.eval_AB(a, z)), 1e-9)
        dets = sysm.factor_determinants(a, z)
        rep.add(prefix + "factor_det", {"a": a, "z": _cplx(z)},
                max(abs(d - 1) for d in dets), 1e-12)
    for _ in range(n_z):
        z = _random_z(rng, upper=True)
        e, es = abs(f.E(z)), abs(f.E_sharp(z))
        # |E^#(z)| < |E(z)| in the upper half-plane; sampled, so evidence only
        rep.add(prefix + "hb_sample", {"z": _cplx(z)}, es / e, 1.0 - 1e-15, kind="evidence")


def entire_function_checks(funcs: ExpPolyFunctions, rep: BatteryReport, rng: random.Random) -> None:
    for _ in range(5):
        z = _random_z(rng)
        rep.add("A_matches_polynomial", {"z": _cplx(z)},
                _vec_rel([funcs.A(z)], [funcs.A_via_poly(z)]), 1e-10)
        rep.add("A_even_B_odd", {"z": _cplx(z)},
                _vec_rel([funcs.A(-z), -funcs.B(-z)], [funcs.A(z), funcs.B(z)]), 1e-10)


def omega_function_checks(funcs: OmegaFunctions, rep: BatteryReport, rng: random.Random) -> None:
    prefix = f"omega[{funcs.omega}]."
    for _ in range(5):
        z = _random_z(rng)
        rep.add(prefix + "E_is_shifted_A", {"z": _cplx(z)},
                _vec_rel([funcs.E(z)], [funcs.A(z) - 1j * funcs.B(z)]), 1e-10)
        rep.add(prefix + "E_sharp_is_shifted_A", {"z": _cplx(z)},
                _vec_rel([funcs.E_sharp(z)], [funcs.A(z) + 1j * funcs.B(z)]), 1e-10)


def kernel_checks(sysm: CanonicalSystem, rep: BatteryReport, rng: random.Random) -> None:
    g = sysm.g
    if sysm.n_defined < 2 * g:
        rep.skip("kernel", f"singular step {sysm.singular_step}")
        return
    top = g * sysm.log_q * 0.999
    for _ in range(10):
        a1, a2 = sorted(math.exp(rng.uniform(0.0, top)) for _ in range(2))
        z, w = _random_z(rng, upper=True), _random_z(rng, upper=True)
        rep.add("kernel_identity", {"a1": a1, "a2": a2, "z": _cplx(z), "w": _cplx(w)},
                sysm.kernel_identity_residual(a1, a2, z, w), 1e-6)
        a = math.exp(rng.uniform(0.0, top))
        K1, K2 = sysm.kernel_K(a, z, w), sysm.kernel_K(a, w, z)
        rep.add("kernel_hermitian", {"a": a}, abs(K1 - K2.conjugate()) / max(abs(K1), 1e-300), 1e-10)
    if not sysm.all_positive:
        rep.skip("kernel_monotone", "some step value is not positive")
        return
    for _ in range(10):
        a1, a0 = sorted(math.exp(rng.uniform(0.0, top)) for _ in range(2))
        z = _random_z(rng, upper=True)
        k1, k0 = sysm.kernel_K(a1, z, z).real, sysm.kernel_K(a0, z, z).real
        # a positive margin means K(a1; z, z) > K(a0; z, z) > 0
        margin = min(k1 - k0, k0) if a1 < a0 else k0
        rep.add("kernel_monotone", {"a1": a1, "a0": a0, "z": _cplx(z)},
                0.0 if margin > 0 else 1.0, 0.0)


def factorization_checks(p: SelfReciprocalPoly, rep: BatteryReport, rng: random.Random,
                         report=None, count: int = 20) -> None:
    report = report or run_log(p)
    try:
        for _ in range(count):
            x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            ok = factorization_identity(p, report.m_values, x)
            rep.add("factorization", {"x": str(x)}, 0.0 if ok else 1.0, 0.0)
    except NotApplicable as exc:
        rep.skip("factorization", str(exc))


def run_battery(p: SelfReciprocalPoly, battery: str = "all", q: float = DEFAULT_Q,
                omegas: Sequence[float] = (), seed: int = 0) -> BatteryReport:
    """Run the named battery (``canonical``, ``factorization``, ``kernel`` or ``all``)."""
    if battery not in ("canonical", "factorization", "kernel", "all"):
        raise ValueError(f"unknown battery {battery!r}")
    rng = random.Random(seed)
    rep = BatteryReport()
    log_report = run_log(p, keep_vectors=True)
    sysm = from_log_report(p, q, log_report)
    if battery in ("canonical", "all"):
        entire_function_checks(sysm.functions, rep, rng)
        system_checks(sysm, rep, rng)
        for om in omegas:
            om = float(om)
            osys = omega_objects(p, q, om)
            omega_function_checks(osys.functions, rep, rng)
            system_checks(osys, rep, rng, prefix=f"omega[{om}].")
    if battery in ("factorization", "all"):
        factorization_checks(p, rep, rng, log_report)
    if battery in ("kernel", "all"):
        kernel_checks(sysm, rep, rng)
    return rep
