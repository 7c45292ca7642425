"""Series expansions tying reciprocal rising factorials to Stirling numbers.

Two expansions are provided together with their generating functions:

* reciprocal rising factorial as a power series in 1/x, whose coefficients
  are signed second-kind numbers (:func:`recip_rising_series`);
* inverse powers 1/x^(k+1) as a series of reciprocal rising factorials
  weighted by first-kind numbers (:func:`power_to_recip_rising`).

Coefficient lists are exact. Only the ``*_eval``-style functions touch
floating point, and they accumulate exact rational terms before a single
final conversion.

The first-kind expansions converge algebraically (the n-th term decays like
n^-(x/lam + 1)), so a plain partial sum at N = 60 is typically accurate to
only a few digits. Those evaluators therefore apply the Levin u-transform,
computed in exact rational arithmetic, to the partial sums; pass
``accelerate=False`` to get the raw partial sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ConvergenceDomain, DegenerateLambda
from .exact_core import Poly, RationalLike, binary64, rising_factorial_eval, scalar
from .stirling import Kind, cached_rows, stirling_number


class SeriesKind(str, enum.Enum):
    RECIP_RISING_TO_POWERS = "recip_rising_to_powers"
    POWERS_TO_RECIP_RISING = "powers_to_recip_rising"
    OGF = "ogf"
    EGF = "egf"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class SeriesTruncation:
    """Exact coefficients for n = k..N of one of the expansions."""

    kind: SeriesKind
    k: int
    r: Fraction
    lam: Fraction
    order: int
    coeffs: tuple[Fraction, ...]
    remainder_estimate: Optional[float] = None

    def coeff(self, n: int) -> Fraction:
        if self.k <= n <= self.order:
            return self.coeffs[n - self.k]
        raise IndexError(f"n={n} outside {self.k}..{self.order}")


@dataclass(frozen=True)
class SeriesValue:
    """A numerically evaluated series.

    ``value`` is the reported estimate (accelerated when requested),
    ``partial_sum`` the plain truncated sum, ``n_terms`` the last index used.
    """

    value: float
    partial_sum: float
    remainder_estimate: float
    n_terms: int
    accelerated: bool = False

    def __float__(self) -> float:
        return self.value


def _nonzero_lambda(lam: RationalLike) -> Fraction:
    lam = scalar(lam)
    if lam == 0:
        raise DegenerateLambda("lambda must be nonzero")
    return lam


def _check_order(k: int, N: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if N < k:
        raise ValueError(f"truncation order N={N} must be >= k={k}")


def _exact_float(x: float) -> Fraction:
    return Fraction(binary64(x))


# -- exact coefficient routes -------------------------------------------------

def recip_rising_series(k: int, r: RationalLike, lam: RationalLike, N: int) -> SeriesTruncation:
    """Coefficients of (1/x)^(n+1), n = k..N, in 1 / <x + r>_{k+1,lam}.

    coeffs[n - k] = (-1)^(n-k) {n+r brace k+r}_{r,lam}, via the explicit sum.
    """
    _check_order(k, N)
    lam, r = _nonzero_lambda(lam), scalar(r)
    coeffs = tuple((-1) ** (n - k) * stirling_number(Kind.SECOND, n, k, r, lam)
                   for n in range(k, N + 1))
    return SeriesTruncation(SeriesKind.RECIP_RISING_TO_POWERS, k, r, lam, N, coeffs)


def power_series_divide(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> list[Fraction]:
    """Coefficients 0..order of num/den as a formal power series (den[0] != 0)."""
    if not den or den[0] == 0:
        raise ZeroDivisionError("denominator must have a nonzero constant term")
    q: list[Fraction] = []
    for n in range(order + 1):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * q[n - i]
        q.append(acc / den[0])
    return q


def ogf_coefficients(k: int, r: RationalLike, lam: RationalLike, N: int) -> list[Fraction]:
    """[x^n] of x^k / prod_{j<=k} (1 - (r + j lam) x) for n = k..N, by long division."""
    _check_order(k, N)
    lam, r = _nonzero_lambda(lam), scalar(r)
    den = Poly.constant(1)
    for j in range(k + 1):
        den = den * Poly([1, -(r + j * lam)])
    num = [Fraction(0)] * k + [Fraction(1)]
    return power_series_divide(num, den.coeffs, N)[k:]


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += ai * b[j]
    return out


def _exp_series(c: Fraction, order: int) -> list[Fraction]:
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * c / n)
    return out


def egf_coefficients(k: int, r: RationalLike, lam: RationalLike, N: int) -> list[Fraction]:
    """n! [t^n] of (e^(lam t) - 1)^k e^(r t) / (lam^k k!) for n = k..N."""
    _check_order(k, N)
    lam, r = _nonzero_lambda(lam), scalar(r)
    base = _exp_series(lam, N)
    base[0] -= 1
    prod = _exp_series(r, N)
    for _ in range(k):
        prod = _series_mul(prod, base, N)
    scale = lam**k * math.factorial(k)
    return [prod[n] * math.factorial(n) / scale for n in range(k, N + 1)]


def first_kind_series(k: int, r: RationalLike, lam: RationalLike, N: int) -> SeriesTruncation:
    """Weights [n+r brack k+r]_{r,lam}, n = k..N, of the inverse-power expansion."""
    _check_order(k, N)
    lam, r = _nonzero_lambda(lam), scalar(r)
    rows = cached_rows(Kind.FIRST_UNSIGNED, N, r, lam)
    return SeriesTruncation(SeriesKind.POWERS_TO_RECIP_RISING, k, r, lam, N,
                            tuple(rows[n][k] for n in range(k, N + 1)))


def truncation_residual(k: int, r: RationalLike, lam: RationalLike, N: int) -> Poly:
    """P(y) Q(y) - y^(k+1) with y = 1/x.

    P is the order-N truncation of the reciprocal-rising series and
    Q(y) = prod_j (1 + (r + j lam) y), so that <x+r>_{k+1,lam} = Q(y) / y^(k+1).
    When the expansion is right, every surviving term has degree >= N + 2.
    """
    trunc = recip_rising_series(k, r, lam, N)
    p = Poly([0] * (k + 1) + list(trunc.coeffs))
    q = Poly.constant(1)
    for j in range(k + 1):
        q = q * Poly([1, trunc.r + j * trunc.lam])
    return p * q - Poly([0] * (k + 1) + [1])


def lowest_degree(poly: Poly) -> int:
    """Index of the lowest nonzero coefficient; -1 for the zero polynomial."""
    for i, c in enumerate(poly.coeffs):
        if c != 0:
            return i
    return -1


# -- acceleration -----------------------------------------------------------------

def levin_u(terms: Sequence[Fraction], beta: int = 1) -> Optional[Fraction]:
    """Levin u-transform L_m^(0) of the series sum(terms), m = len(terms) - 1.

    Exact when the remainder after term j equals (j + beta) * terms[j] times a
    polynomial of degree < m in 1 / (j + beta). Returns None when a term is
    zero, since the transform is undefined there.
    """
    m = len(terms) - 1
    if m < 1 or any(t == 0 for t in terms):
        return None
    num = Fraction(0)
    den = Fraction(0)
    s = Fraction(0)
    for j, t in enumerate(terms):
        s += t
        omega = (j + beta) * t
        w = math.comb(m, j) * (j + beta) ** (m - 1)
        if j % 2:
            w = -w
        num += w * s / omega
        den += w / omega
    if den == 0:
        return None
    return num / den


def _summarize(terms: list[Fraction], accelerate: bool) -> tuple[Fraction, Fraction, float]:
    """(value, partial sum, remainder estimate) from exact terms."""
    partial = sum(terms, Fraction(0))
    if not terms or all(t == 0 for t in terms[1:]):
        # a one-term series (k = 0, r = 0 gives zero weights beyond n = k) is exact
        return partial, partial, 0.0
    if accelerate and len(terms) >= 4:
        history = [levin_u(terms[: len(terms) - i]) for i in range(3)]
        if all(h is not None for h in history):
            spread = max(abs(float(history[0] - h)) for h in history[1:])
            return history[0], partial, spread
    return partial, partial, abs(float(terms[-1])) * len(terms)


def _first_kind_terms(k: int, r: Fraction, lam: Fraction, x: Fraction, start: int, N: int,
                      weight_shift: int = 0) -> list[Fraction]:
    rows = cached_rows(Kind.FIRST_UNSIGNED, N + weight_shift, r, lam)
    terms = []
    denom = rising_factorial_eval(x + r, start + 1, lam)
    for n in range(start, N + 1):
        if n > start:
            denom *= x + r + n * lam
        terms.append(rows[n + weight_shift][k] / denom)
    return terms


# -- numerical evaluators ---------------------------------------------------------

def recip_rising_series_eval(k: int, r: RationalLike, lam: RationalLike, x: float, N: int) -> SeriesValue:
    """Partial sum of the reciprocal-rising series in powers of 1/x.

    Requires lam > 0 and |r + l lam| < x for every pole offset l <= k, which
    makes each geometric expansion of 1/(x + r + l lam) converge.
    """
    _check_order(k, N)
    lam, r = scalar(lam), scalar(r)
    if lam <= 0:
        raise ConvergenceDomain("evaluation requires lambda > 0")
    xq = _exact_float(x)
    radius = max(abs(r), abs(r + k * lam))
    if not xq > radius:
        raise ConvergenceDomain(f"need x > {float(radius)} for convergence, got x={x}")
    trunc = recip_rising_series(k, r, lam, N)
    terms = [c / xq ** (n + 1) for n, c in zip(range(k, N + 1), trunc.coeffs)]
    partial = sum(terms, Fraction(0))
    ratio = float(radius / xq)
    estimate = abs(float(terms[-1])) * ratio / (1 - ratio) if ratio > 0 else 0.0
    return SeriesValue(float(partial), float(partial), estimate, N)


def power_to_recip_rising(k: int, r: RationalLike, lam: RationalLike, x: float, N: Optional[int] = None,
                          *, accelerate: bool = True, tol: float = 1e-12, n_max: int = 200) -> SeriesValue:
    """Evaluate sum_{n=k}^{N} [n+r brack k+r]_{r,lam} / <x + r>_{n+1,lam}.

    The series converges to (1/x)^(k+1). With ``N=None`` the order grows until
    successive estimates agree to ``tol`` relative, capped at ``n_max``.
    """
    lam, r = scalar(lam), scalar(r)
    xq = _exact_float(x)
    if lam <= 0 or xq <= 0 or xq + r <= 0:
        raise ConvergenceDomain("need lambda > 0, x > 0 and x + r > 0")
    if N is not None:
        _check_order(k, N)
        terms = _first_kind_terms(k, r, lam, xq, k, N)
        value, partial, est = _summarize(terms, accelerate)
        return SeriesValue(float(value), float(partial), est, N, accelerate)
    return _adaptive(lambda n: _first_kind_terms(k, r, lam, xq, k, n), k, accelerate, tol, n_max)


def shifted_identity_eval(k: int, lam: RationalLike, x: float, N: Optional[int] = None,
                          *, accelerate: bool = True, tol: float = 1e-12, n_max: int = 200) -> SeriesValue:
    """Evaluate sum_{n=k-1}^{N} [n+1 brack k]_lam / <x>_{n+1,lam}, which tends to (x - lam)^-k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lam = scalar(lam)
    xq = _exact_float(x)
    if lam <= 0 or xq <= lam:
        raise ConvergenceDomain("need lambda > 0 and x > lambda")
    zero = Fraction(0)

    def build(n: int) -> list[Fraction]:
        return _first_kind_terms(k, zero, lam, xq, k - 1, n, weight_shift=1)

    if N is not None:
        if N < k - 1:
            raise ValueError(f"N={N} must be >= k-1={k - 1}")
        value, partial, est = _summarize(build(N), accelerate)
        return SeriesValue(float(value), float(partial), est, N, accelerate)
    return _adaptive(build, k - 1, accelerate, tol, n_max)


def _adaptive(build, start: int, accelerate: bool, tol: float, n_max: int) -> SeriesValue:
    N = start + 8
    while True:
        terms = build(N)
        value, partial, est = _summarize(terms, accelerate)
        if est <= tol * abs(float(value)) or N >= n_max:
            return SeriesValue(float(value), float(partial), est, N, accelerate)
        N = min(n_max, N + 8)
