"""Independent ground truth for the criteria: numeric roots, exact square-freeness
and generators of instances with a known zero configuration.

Instances are built from the factorization ``c_0 prod (x^2 - 2 lambda_j x + 1)``:
both roots of a factor lie on the unit circle exactly when ``lambda_j`` is real
and in ``[-1, 1]``, and the factor is a square exactly when ``lambda_j = +-1``.
"""

from __future__ import annotations

import cmath
import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .arith import GaussianRational, UniPoly, poly_gcd, square_free_decomposition
from .criterion import SelfReciprocalPoly
from .kernels import aberth

ON_CIRCLE_TOL = 1e-9
RESIDUAL_TOL = 1e-10


class OracleFailure(RuntimeError):
    """The root iteration did not converge after all retries."""


class Location(str, enum.Enum):
    ON_CIRCLE = "OnCircle"
    OFF_CIRCLE = "OffCircle"


@dataclass(frozen=True)
class RootInfo:
    value: complex
    multiplicity: int
    location: Location
    distance: float  # |rho| - 1


@dataclass
class RootReport:
    roots: list = field(default_factory=list)  # RootInfo, one per distinct root
    all_on_circle: bool = True
    all_simple: bool = True
    max_residual: float = 0.0

    def multiset(self) -> list[complex]:
        out = []
        for r in self.roots:
            out.extend([r.value] * r.multiplicity)
        return out

    @property
    def degree(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def to_json(self) -> dict:
        return {
            "all_on_circle": self.all_on_circle,
            "all_simple": self.all_simple,
            "max_residual": self.max_residual,
            "roots": [
                {"re": r.value.real, "im": r.value.imag, "multiplicity": r.multiplicity,
                 "location": r.location.value, "distance": r.distance}
                for r in self.roots
            ],
        }


# -- numeric roots -------------------------------------------------------------------


def _float_coeffs(f: UniPoly) -> list[float]:
    lead = f.lead
    return [float(c / lead) for c in f.coeffs]


def _initial_guesses(c: Sequence[float], rng: random.Random) -> list[complex]:
    n = len(c) - 1
    # Fujiwara-style bound on the root moduli of a monic polynomial
    bound = 2 * max(abs(c[n - k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(min(bound, 1e6), 1e-6) * rng.uniform(0.5, 1.0)
    offset = rng.uniform(0, 2 * math.pi)
    return [cmath.rect(radius, offset + 2 * math.pi * k / n) for k in range(n)]


def _newton_polish(c: Sequence[float], z: complex, steps: int = 3) -> complex:
    for _ in range(steps):
        pv = 0j
        dv = 0j
        for x in reversed(c):
            dv = dv * z + pv
            pv = pv * z + x
        if dv == 0 or pv == 0:
            break
        nz = z - pv / dv
        if abs(nz - z) <= 1e-17 * max(1.0, abs(z)):
            z = nz
            break
        z = nz
    return z


def numeric_roots(coeffs: Sequence, retries: int = 5, seed: int = 0) -> list[complex]:
    """All complex roots of an ascending coefficient list by Aberth iteration."""
    f = UniPoly(coeffs)
    if f.degree < 1:
        return []
    c = _float_coeffs(f)
    if f.degree == 1:
        return [complex(-c[0])]
    rng = random.Random(seed)
    for _ in range(retries):
        roots, ok, _it = aberth(c, _initial_guesses(c, rng))
        if ok:
            return [_newton_polish(c, r) for r in roots]
    raise OracleFailure(f"Aberth iteration did not converge for degree {f.degree}")


def _rel_residual(full: Sequence[float], z: complex) -> float:
    """``|P(z)| / sum |c_k| |z|^k``, the backward error of ``z`` as a root."""
    pv = 0j
    scale = 0.0
    az = abs(z)
    for x in reversed(full):
        pv = pv * z + x
        scale = scale * az + abs(x)
    return abs(pv) / scale if scale else 0.0


def square_free(p: SelfReciprocalPoly) -> bool:
    """Exact test: ``gcd(P, P')`` over the rationals is a constant."""
    P = p.to_unipoly()
    return poly_gcd(P, P.derivative()).degree == 0


def find_roots(p: SelfReciprocalPoly, tol: float = ON_CIRCLE_TOL) -> RootReport:
    """Roots of ``P`` with exact multiplicities from the square-free decomposition."""
    P = p.to_unipoly()
    full = [float(x) for x in P.coeffs]
    report = RootReport()
    for factor, mult in square_free_decomposition(P):
        for z in numeric_roots(factor.coeffs):
            dist = abs(z) - 1.0
            loc = Location.ON_CIRCLE if abs(dist) <= tol else Location.OFF_CIRCLE
            report.roots.append(RootInfo(z, mult, loc, dist))
            report.max_residual = max(report.max_residual, _rel_residual(full, z))
    report.roots.sort(key=lambda r: (round(r.value.real, 12), round(r.value.imag, 12)))
    report.all_on_circle = all(r.location is Location.ON_CIRCLE for r in report.roots)
    report.all_simple = all(r.multiplicity == 1 for r in report.roots)
    if report.degree != 2 * p.g:
        raise OracleFailure("root count does not match the degree")
    if report.max_residual > RESIDUAL_TOL:
        raise OracleFailure(f"root residual {report.max_residual:.2e} exceeds {RESIDUAL_TOL}")
    return report


# -- lambda parametrization -------------------------------------------------------------


Lambda = Union[Fraction, GaussianRational]


@dataclass(frozen=True)
class LambdaSpec:
    """``c_0 prod_j (x^2 - 2 lambda_j x + 1)``.

    ``real`` holds rational ``lambda_j``; each entry of ``complex_pairs`` stands
    for a conjugate pair ``lambda, conj(lambda)`` merged into one real quartic,
    so ``g = len(real) + 2 len(complex_pairs)``.
    """

    real: tuple = ()
    complex_pairs: tuple = ()
    c0: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "real", tuple(Fraction(x) for x in self.real))
        pairs = tuple(x if isinstance(x, GaussianRational) else GaussianRational(*x)
                      for x in self.complex_pairs)
        if any(x.im == 0 for x in pairs):
            raise ValueError("complex pairs need a nonzero imaginary part")
        object.__setattr__(self, "complex_pairs", pairs)
        object.__setattr__(self, "c0", Fraction(self.c0))
        if self.c0 == 0:
            raise ValueError("c_0 must be nonzero")

    @property
    def g(self) -> int:
        return len(self.real) + 2 * len(self.complex_pairs)

    def expected(self) -> tuple[bool, bool]:
        """``(all_on_circle, all_simple)`` read off the lambdas exactly."""
        on = not self.complex_pairs and all(-1 <= x <= 1 for x in self.real)
        reals = list(self.real)
        simple = len(set(reals)) == len(reals) and all(abs(x) != 1 for x in reals)
        pairs = [(x.re, abs(x.im)) for x in self.complex_pairs]
        simple = simple and len(set(pairs)) == len(pairs)
        return on, simple


def from_lambdas(spec: Union[LambdaSpec, Sequence], c0=1) -> SelfReciprocalPoly:
    """Exact expansion of ``c_0 prod (x^2 - 2 lambda_j x + 1)``."""
    if not isinstance(spec, LambdaSpec):
        spec = LambdaSpec(tuple(spec), (), c0)
    if spec.g < 1:
        raise ValueError("need at least one lambda")
    P = UniPoly([spec.c0])
    for lam in spec.real:
        P = P * UniPoly([1, -2 * lam, 1])
    for lam in spec.complex_pairs:
        s = 4 * lam.re
        P = P * UniPoly([1, -s, 2 + 4 * lam.norm(), -s, 1])
    full = list(P.coeffs)
    assert full == full[::-1], "expansion is not palindromic"
    return SelfReciprocalPoly(full[: spec.g + 1])


# -- generators ---------------------------------------------------------------------------


class InstanceMode(str, enum.Enum):
    ON_CIRCLE_SIMPLE = "OnCircleSimple"
    ON_CIRCLE_MULTIPLE = "OnCircleMultiple"
    OFF_CIRCLE = "OffCircle"
    MIXED = "Mixed"


def _inside(rng: random.Random, taken: set) -> Fraction:
    # |lambda| <= 98/100 keeps a margin of at least 1/100 from +-1
    while True:
        x = Fraction(rng.randint(-98, 98), 100)
        if x not in taken:
            taken.add(x)
            return x


def _outside(rng: random.Random) -> Fraction:
    x = Fraction(rng.randint(101, 300), 100)
    return x if rng.random() < 0.5 else -x


def _complex_lambda(rng: random.Random) -> GaussianRational:
    re = Fraction(rng.randint(-150, 150), 100)
    im = Fraction(rng.randint(10, 150), 100)
    return GaussianRational(re, im if rng.random() < 0.5 else -im)


def _c0(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 1, 2, 3]))


def random_spec(mode: Union[InstanceMode, str], g: int, seed: int) -> LambdaSpec:
    """Deterministic ``LambdaSpec`` honoring the mode's zero configuration."""
    mode = InstanceMode(mode)
    if g < 1:
        raise ValueError("g must be at least 1")
    rng = random.Random(f"{mode.value}:{g}:{seed}")
    c0 = _c0(rng)
    taken: set = set()
    if mode is InstanceMode.MIXED:
        mode = rng.choice([InstanceMode.ON_CIRCLE_SIMPLE, InstanceMode.ON_CIRCLE_MULTIPLE,
                           InstanceMode.OFF_CIRCLE])
    if mode is InstanceMode.ON_CIRCLE_SIMPLE:
        return LambdaSpec(tuple(_inside(rng, taken) for _ in range(g)), (), c0)
    if mode is InstanceMode.ON_CIRCLE_MULTIPLE:
        if g == 1 or rng.random() < 0.3:
            first = [Fraction(rng.choice([-1, 1]))]
        else:
            x = _inside(rng, taken)
            first = [x, x]
        rest = [_inside(rng, taken) if rng.random() < 0.8 else rng.choice(first)
                for _ in range(g - len(first))]
        lams = first + rest
        rng.shuffle(lams)
        return LambdaSpec(tuple(lams), (), c0)
    # off the circle: a real lambda outside [-1, 1] or a conjugate pair
    if g >= 2 and rng.random() < 0.4:
        pairs = [_complex_lambda(rng)]
        reals = [_inside(rng, taken) if rng.random() < 0.7 else _outside(rng) for _ in range(g - 2)]
        return LambdaSpec(tuple(reals), tuple(pairs), c0)
    reals = [_outside(rng)]
    reals += [_inside(rng, taken) if rng.random() < 0.6 else _outside(rng) for _ in range(g - 1)]
    rng.shuffle(reals)
    return LambdaSpec(tuple(reals), (), c0)


def random_instance(mode: Union[InstanceMode, str], g: int, seed: int) -> SelfReciprocalPoly:
    return from_lambdas(random_spec(mode, g, seed))


# -- closed forms in the lambda parameters ---------------------------------------------


def lambda_r_values(lambdas: Sequence) -> list:
    """``R_1 .. R_{2g}`` from the closed forms in ``lambda_j`` for ``g <= 3``.

    Entries are ``None`` where a closed form has a vanishing denominator.
    """
    lam = [Fraction(x) for x in lambdas]
    g = len(lam)
    if not 1 <= g <= 3:
        raise ValueError("closed forms are available for g = 1, 2, 3 only")

    def ratio(num, den):
        return None if den == 0 else Fraction(num) / den

    one = Fraction(1)
    pairs = [(i, j) for i in range(g) for j in range(i + 1, g)]
    sq = [(lam[i] - lam[j]) ** 2 for i, j in pairs]
    R: list = [one]
    if g == 1:
        R.append(ratio(1 - lam[0], 1 + lam[0]))
        return R
    R.append(ratio(sum(1 - x for x in lam), sum(1 + x for x in lam)))
    R.append(ratio(g * sum(1 - x * x for x in lam), sum(sq)))
    if g == 2:
        R.append(ratio((1 - lam[0]) * (1 - lam[1]), (1 + lam[0]) * (1 + lam[1])))
        return R
    R.append(ratio(sum((1 - lam[i]) * (1 - lam[j]) * d for (i, j), d in zip(pairs, sq)),
                   sum((1 + lam[i]) * (1 + lam[j]) * d for (i, j), d in zip(pairs, sq))))
    prod_sq = sq[0] * sq[1] * sq[2]
    R.append(ratio(3 * sum((1 - lam[i] ** 2) * (1 - lam[j] ** 2) * d
                           for (i, j), d in zip(pairs, sq)), prod_sq))
    R.append(ratio((1 - lam[0]) * (1 - lam[1]) * (1 - lam[2]),
                   (1 + lam[0]) * (1 + lam[1]) * (1 + lam[2])))
    return R
