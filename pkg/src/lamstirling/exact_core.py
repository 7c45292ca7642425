"""Exact rational scalars, dense polynomials and generalized factorials.

All scalars on the exact path are :class:`fractions.Fraction` instances.
Floating point enters only through :func:`binary64`, used by the series
evaluators and the integral module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]


def scalar(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and text of the form ``"p/q"``, ``"p"`` or a
    decimal literal such as ``"0.5"`` (parsed exactly). Floats are rejected
    so that binary rounding never leaks into the exact path silently.

    >>> scalar("0.5")
    Fraction(1, 2)
    >>> scalar("-3/6")
    Fraction(-1, 2)
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        lowered = text.lower()
        if "e" in lowered or "inf" in lowered or "nan" in lowered or "_" in text:
            raise ValueError(f"not a rational literal: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_scalar(value: Fraction) -> str:
    """Render ``value`` as ``"p/q"`` (or ``"p"`` when the denominator is 1)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binary64(value: float | int | Fraction) -> float:
    """Convert to a finite IEEE double, rejecting NaN and infinities."""
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"binary64 value must be finite, got {out!r}")
    return out


class Poly:
    """Dense univariate polynomial with Fraction coefficients, ascending powers.

    Instances are immutable; trailing zeros are stripped so that the zero
    polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def linear(cls, root_shift: RationalLike) -> Poly:
        """Return ``x + root_shift``."""
        return cls([root_shift, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = scalar(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly | RationalLike) -> Poly:
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: Poly | RationalLike) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: RationalLike) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        other = _as_poly(other)
        if not self._coeffs or not other._coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({[format_scalar(c) for c in self._coeffs]})"


def _as_poly(value: Poly | RationalLike) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


def poly_product(factors: Sequence[Poly]) -> Poly:
    return reduce(lambda a, b: a * b, factors, Poly.constant(1))


def falling_factorial_eval(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """x(x - lam)(x - 2 lam)...(x - (n-1) lam); 1 for n == 0."""
    _check_order(n)
    x, lam = scalar(x), scalar(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x - j * lam
    return out


def rising_factorial_eval(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """x(x + lam)...(x + (n-1) lam); 1 for n == 0."""
    _check_order(n)
    x, lam = scalar(x), scalar(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x + j * lam
    return out


def rising_factorial_poly(n: int, lam: RationalLike, r: RationalLike = 0) -> Poly:
    """Expand (x + r)(x + r + lam)...(x + r + (n-1) lam) in powers of x."""
    _check_order(n)
    lam, r = scalar(lam), scalar(r)
    return poly_product([Poly.linear(r + j * lam) for j in range(n)])


def falling_factorial_poly(n: int, lam: RationalLike) -> Poly:
    """Expand x(x - lam)...(x - (n-1) lam) in powers of x."""
    _check_order(n)
    lam = scalar(lam)
    return poly_product([Poly.linear(-j * lam) for j in range(n)])


def lambda_binomial(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """The lambda-binomial coefficient (x)_{n,lam} / n!."""
    return falling_factorial_eval(x, n, lam) / math.factorial(n)


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
