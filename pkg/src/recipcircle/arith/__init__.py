"""Exact scalar arithmetic: rationals, Gaussian rationals, polynomials and rational functions."""

from fractions import Fraction as BigRational

from .gaussian import GaussianRational
from .poly import UniPoly, poly_gcd, square_free_decomposition
from .ratfunc import (
    DivisionByZero,
    Infinite,
    PoleAtPoint,
    RationalFunction,
    eval_at,
    limit_at_one,
    reduce,
)
from .sturm import NotPositive, ZeroPolynomial, positive_on_right_ray, ray_certificate, sturm_count

__all__ = [
    "BigRational",
    "DivisionByZero",
    "GaussianRational",
    "Infinite",
    "NotPositive",
    "PoleAtPoint",
    "RationalFunction",
    "UniPoly",
    "ZeroPolynomial",
    "eval_at",
    "limit_at_one",
    "poly_gcd",
    "positive_on_right_ray",
    "ray_certificate",
    "reduce",
    "square_free_decomposition",
    "sturm_count",
]
