"""Exact lambda-Stirling numbers of both kinds and their r-analogues."""

from .errors import (ConvergenceDomain, DegenerateLambda, DomainError, LambdaStirlingError,
                     PoleHit, ToleranceNotMet, UnknownSuite)
from .exact_core import (Poly, binary64, falling_factorial_eval, falling_factorial_poly,
                         format_scalar, lambda_binomial, rising_factorial_eval,
                         rising_factorial_poly, scalar)
from .stirling import (Kind, StirlingQuery, Triangle, stirling1_signed, stirling1_unsigned_r,
                       stirling2, stirling2_r, stirling_number, triangle)

__all__ = [
    "ConvergenceDomain", "DegenerateLambda", "DomainError", "LambdaStirlingError", "PoleHit",
    "ToleranceNotMet", "UnknownSuite", "Poly", "binary64", "falling_factorial_eval",
    "falling_factorial_poly", "format_scalar", "lambda_binomial", "rising_factorial_eval",
    "rising_factorial_poly", "scalar", "Kind", "StirlingQuery", "Triangle", "stirling1_signed",
    "stirling1_unsigned_r", "stirling2", "stirling2_r", "stirling_number", "triangle",
]
