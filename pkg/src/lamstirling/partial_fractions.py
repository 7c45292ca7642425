"""Partial fractions of 1 / ((x+r)(x+r+lam)...(x+r+k lam)).

The poles -r - l*lam are simple whenever lam != 0, and the residue at the
l-th pole is (-1)^l C(k, l) / (lam^k k!), independently of r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateLambda, PoleHit
from .exact_core import Poly, RationalLike, poly_product, rising_factorial_eval, scalar


@dataclass(frozen=True)
class PartialFractionForm:
    k: int
    r: Fraction
    lam: Fraction
    coefficients: tuple[Fraction, ...]

    def poles(self) -> tuple[Fraction, ...]:
        return tuple(-self.r - l * self.lam for l in range(self.k + 1))


def pf_coefficients(k: int, r: RationalLike, lam: RationalLike) -> PartialFractionForm:
    if k < 0:
        raise ValueError("k must be nonnegative")
    r, lam = scalar(r), scalar(lam)
    if lam == 0:
        raise DegenerateLambda("lambda = 0 gives a repeated pole")
    scale = lam**k * math.factorial(k)
    coeffs = tuple(Fraction((-1) ** l * math.comb(k, l)) / scale for l in range(k + 1))
    return PartialFractionForm(k, r, lam, coeffs)


def pf_evaluate(form: PartialFractionForm, x: RationalLike) -> Fraction:
    """Sum of K_l / (x + r + l lam); raises PoleHit at a pole."""
    x = scalar(x)
    total = Fraction(0)
    for l, coeff in enumerate(form.coefficients):
        denom = x + form.r + l * form.lam
        if denom == 0:
            raise PoleHit(f"x = {x} is the pole of index {l}")
        total += coeff / denom
    return total


def pf_recombine(form: PartialFractionForm) -> Poly:
    """Numerator sum_l K_l prod_{j != l} (x + r + j lam) over the common denominator."""
    factors = [Poly.linear(form.r + j * form.lam) for j in range(form.k + 1)]
    total = Poly()
    for l, coeff in enumerate(form.coefficients):
        total = total + coeff * poly_product(factors[:l] + factors[l + 1:])
    return total


def pf_verify(k: int, r: RationalLike, lam: RationalLike) -> bool:
    """True exactly when the recombined numerator is the constant polynomial 1."""
    return pf_recombine(pf_coefficients(k, r, lam)) == Poly.constant(1)


def reciprocal_rising(x: RationalLike, k: int, r: RationalLike, lam: RationalLike) -> Fraction:
    """Direct 1 / <x + r>_{k+1,lam}, the reference value for :func:`pf_evaluate`."""
    denom = rising_factorial_eval(scalar(x) + scalar(r), k + 1, lam)
    if denom == 0:
        raise PoleHit(f"x = {x} is a pole")
    return 1 / denom
