"""Tail integrals of reciprocal rising factorials and related log sums.

Closed forms are alternating binomial sums of logarithms, which cancel
heavily. Two tactics keep them accurate:

* for small orders, every log(c + l lam) is rewritten as
  log(c) + log1p(l lam / c); the log(c) parts cancel exactly because the
  binomial signs sum to zero, and the remaining terms are accumulated with
  ``math.fsum`` in ascending magnitude;
* for the long inverse-power series, where orders reach several hundred and
  binomials reach 1e150, the sums are evaluated with mpmath at a working
  precision sized to the largest binomial.

Quadrature uses :func:`scipy.integrate.quad` after mapping [a, inf) to [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
from scipy import integrate

from .errors import DomainError, ToleranceNotMet
from .exact_core import RationalLike, binary64, scalar
from .stirling import Kind, cached_rows


@dataclass(frozen=True)
class TailIntegralSpec:
    """Parameters of the integral of 1 / <x + r>_{k+1,lam} over [a, inf)."""

    a: float
    k: int
    r: Fraction = Fraction(0)
    lam: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "a", binary64(self.a))
        object.__setattr__(self, "lam", binary64(self.lam))
        object.__setattr__(self, "r", scalar(self.r))
        if self.a <= 0:
            raise DomainError(f"a must be > 0, got {self.a}")
        if self.lam <= 0:
            raise DomainError(f"lambda must be > 0, got {self.lam}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if self.r < 0:
            raise DomainError(f"r must be >= 0, got {self.r}")

    def integrand(self, x: float) -> float:
        shift = x + float(self.r)
        out = 1.0
        for l in range(self.k + 1):
            out /= shift + l * self.lam
        return out


def _alternating_log1p_sum(c: float, k: int, lam: float) -> float:
    """sum_{l=0}^{k} C(k,l) (-1)^l log(c + l lam), for k >= 1 and c > 0."""
    terms = [(-1) ** l * math.comb(k, l) * math.log1p(l * lam / c) for l in range(1, k + 1)]
    terms.sort(key=abs)
    return math.fsum(terms)


def frullani_log_sum(b: float, k: int, lam: float) -> float:
    """sum_{l=0}^{k} C(k,l) (-1)^l log(b + l lam); tends to 0 as b grows."""
    b, lam = binary64(b), binary64(lam)
    if b <= 0 or lam <= 0:
        raise DomainError("b and lambda must be > 0")
    if k < 1:
        raise DomainError("k must be >= 1")
    return _alternating_log1p_sum(b, k, lam)


def tail_integral_closed_form(spec: TailIntegralSpec) -> float:
    """(1 / (k! lam^k)) sum_l C(k,l) (-1)^(l+1) log(a + r + l lam)."""
    c = spec.a + float(spec.r)
    log_sum = -_alternating_log1p_sum(c, spec.k, spec.lam)
    return log_sum / (math.factorial(spec.k) * spec.lam**spec.k)


def tail_integral_quadrature(spec: TailIntegralSpec, tol: float = 1e-10) -> float:
    """Adaptive quadrature after substituting x = a + t / (1 - t)."""
    tol = binary64(tol)
    if tol <= 0:
        raise DomainError("tol must be > 0")

    def mapped(t: float) -> float:
        if t >= 1.0:
            return 0.0
        s = 1.0 - t
        return spec.integrand(spec.a + t / s) / (s * s)

    value, err, info = integrate.quad(mapped, 0.0, 1.0, epsabs=tol, epsrel=0.0,
                                      limit=200, full_output=1)[:3]
    if err > tol:
        raise ToleranceNotMet(f"quadrature error estimate {err:.3g} exceeds tol {tol:.3g}")
    return value


# -- inverse-power series ------------------------------------------------------------

@dataclass(frozen=True)
class InversePowerResult:
    value: float
    target: float
    n_terms: int
    terms: tuple[float, ...]

    def __float__(self) -> float:
        return self.value


class _LogSumTable:
    """mpmath logs of a + r + l lam for l = 0..n_max at a fixed working precision."""

    def __init__(self, c: float, lam: float, n_max: int):
        # largest binomial C(n, n/2) < 2^n, plus headroom for the tiny result
        self.dps = int(n_max * math.log10(2)) + 40
        with mpmath.workdps(self.dps):
            c_mp, lam_mp = mpmath.mpf(c), mpmath.mpf(lam)
            self.logs = [mpmath.log(c_mp + l * lam_mp) for l in range(n_max + 1)]

    def weighted_tail_integral(self, weight: Fraction, n: int, lam: float) -> float:
        """weight * (1 / (n! lam^n)) sum_l C(n,l) (-1)^(l+1) log(c + l lam).

        The weight (a first-kind number, up to ~n!) is applied before leaving
        mpmath so neither factor overflows binary64 on its own.
        """
        with mpmath.workdps(self.dps):
            acc = mpmath.mpf(0)
            for l in range(n + 1):
                term = math.comb(n, l) * self.logs[l]
                acc += term if l % 2 else -term
            w = mpmath.mpf(weight.numerator) / weight.denominator
            return float(w * acc / (mpmath.factorial(n) * mpmath.mpf(lam) ** n))


def inverse_power_terms(a: float, k: int, r: RationalLike, lam: float, N: int) -> list[float]:
    """Terms n = k..N of the series for 1 / (k a^k)."""
    spec = TailIntegralSpec(a, k, r, lam)
    if N < k:
        raise ValueError(f"N={N} must be >= k={k}")
    table = _LogSumTable(spec.a + float(spec.r), spec.lam, N)
    rows = cached_rows(Kind.FIRST_UNSIGNED, N, spec.r, Fraction(spec.lam))
    return [table.weighted_tail_integral(rows[n][k], n, spec.lam) for n in range(k, N + 1)]


def inverse_power_series(a: float, k: int, r: RationalLike, lam: float, N: Optional[int] = None,
                         *, tol: float = 1e-9, n_cap: int = 500) -> InversePowerResult:
    """Partial sum of sum_{n>=k} [n+r brack k+r]_{r,lam} I_n, which tends to 1 / (k a^k).

    I_n is the closed-form tail integral of order n. With ``N=None`` the sum
    stops once three consecutive terms fall below ``tol * |partial sum|``,
    or at ``n_cap``.
    """
    spec = TailIntegralSpec(a, k, r, lam)
    target = 1.0 / (k * spec.a**k)
    if N is not None:
        terms = inverse_power_terms(spec.a, k, spec.r, spec.lam, N)
        return InversePowerResult(math.fsum(terms), target, N, tuple(terms))

    table = _LogSumTable(spec.a + float(spec.r), spec.lam, n_cap)
    rows = cached_rows(Kind.FIRST_UNSIGNED, n_cap, spec.r, Fraction(spec.lam))
    terms: list[float] = []
    small = 0
    n = k
    for n in range(k, n_cap + 1):
        terms.append(table.weighted_tail_integral(rows[n][k], n, spec.lam))
        partial = math.fsum(terms)
        small = small + 1 if abs(terms[-1]) < tol * abs(partial) else 0
        if small >= 3:
            break
    return InversePowerResult(math.fsum(terms), target, n, tuple(terms))
