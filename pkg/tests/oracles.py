"""Independent reference computations used by the test suite.

None of these call into the package: brute-force enumeration, sympy
expansion and mpmath quadrature only.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath
import sympy

X = sympy.Symbol("x")


def set_partitions_count(n: int, k: int) -> int:
    """Partitions of {1..n} into k nonempty blocks, by restricted growth strings."""
    if n == 0:
        return 1 if k == 0 else 0
    count = 0

    def grow(prefix_max: int, length: int):
        nonlocal count
        if length == n:
            if prefix_max + 1 == k:
                count += 1
            return
        for b in range(prefix_max + 2):
            if b + 1 > k:
                break
            grow(max(prefix_max, b), length + 1)

    grow(0, 1)
    return count


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def permutations_by_cycles(n: int) -> list[int]:
    counts = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        counts[cycle_count(perm)] += 1
    return counts


def _sym(q) -> sympy.Rational:
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def sympy_coeffs(expr) -> list[Fraction]:
    """Ascending coefficients of a polynomial in X, as Fractions."""
    poly = sympy.Poly(sympy.expand(expr), X)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def rising_expanded(n: int, lam, r) -> list[Fraction]:
    lam, r = _sym(lam), _sym(r)
    return sympy_coeffs(sympy.prod([X + r + j * lam for j in range(n)]) if n else sympy.Integer(1))


def falling_expanded(n: int, lam) -> list[Fraction]:
    lam = _sym(lam)
    return sympy_coeffs(sympy.prod([X - j * lam for j in range(n)]) if n else sympy.Integer(1))


def apart_coefficients(k: int, r, lam) -> list[Fraction]:
    """Residues of 1/prod(x + r + l lam) from sympy.apart, ordered by pole index l."""
    r, lam = _sym(r), _sym(lam)
    expr = 1 / sympy.prod([X + r + l * lam for l in range(k + 1)])
    parts = sympy.Add.make_args(sympy.apart(expr, X))
    residues = {}
    for term in parts:
        num, den = sympy.fraction(sympy.together(term))
        den_poly = sympy.Poly(den, X)
        lead = den_poly.LC()
        root = -den_poly.all_coeffs()[1] / lead
        residues[root] = num / lead
    out = []
    for l in range(k + 1):
        val = residues[-r - l * lam]
        out.append(Fraction(int(sympy.Rational(val).p), int(sympy.Rational(val).q)))
    return out


def tail_integral_quad(a: float, k: int, r: float, lam: float) -> float:
    """mpmath tanh-sinh quadrature of 1/<x+r>_{k+1,lam} over [a, inf)."""
    with mpmath.workdps(30):
        f = lambda x: 1 / mpmath.fprod([x + r + l * lam for l in range(k + 1)])
        return float(mpmath.quad(f, [a, mpmath.inf]))


def mp_log_sum(b: float, k: int, lam: float, dps: int = 60) -> float:
    with mpmath.workdps(dps):
        return float(mpmath.fsum((-1) ** l * math.comb(k, l) * mpmath.log(mpmath.mpf(b) + l * mpmath.mpf(lam))
                                 for l in range(k + 1)))
