"""Exact unit-circle zero criteria for self-reciprocal polynomials and the
associated canonical-system objects."""

from .criterion import (
    CriterionReport,
    InvalidPolynomial,
    SelfReciprocalPoly,
    Verdict,
    r_sequence,
    run_log,
    run_omega,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "CriterionReport",
    "InvalidPolynomial",
    "SelfReciprocalPoly",
    "Verdict",
    "r_sequence",
    "run_log",
    "run_omega",
]
