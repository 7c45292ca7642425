"""Named invariant suites driven by the ``verify`` CLI command.

Each suite returns a :class:`Report`; the first failing case is kept as the
counterexample.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import integrals, partial_fractions, series, stirling, transforms
from .errors import UnknownSuite
from .exact_core import format_scalar

N_MAX_CAP = 20
K_MAX_CAP = 10

DEFAULT_R = (Fraction(0), Fraction(1), Fraction(2), Fraction(3))
DEFAULT_LAMBDA = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(-1))


@dataclass
class Report:
    suite: str
    checks: int = 0
    defects: int = 0
    counterexample: Optional[str] = None
    max_abs_diff: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.defects == 0

    def record(self, ok: bool, case: str) -> None:
        self.checks += 1
        if not ok:
            self.defects += 1
            if self.counterexample is None:
                self.counterexample = case

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.suite}: {status} ({self.checks} checks, {self.defects} defects"
        if self.max_abs_diff is not None:
            line += f", max abs_diff {self.max_abs_diff:.3e}"
        line += ")"
        if self.counterexample:
            line += f"; first counterexample: {self.counterexample}"
        return line


@dataclass(frozen=True)
class Bounds:
    n_max: int = 12
    k_max: int = 10
    r: Optional[Fraction] = None
    lam: Optional[Fraction] = None
    tol: float = 1e-9

    def __post_init__(self):
        if not 0 <= self.n_max <= N_MAX_CAP:
            raise ValueError(f"n_max must lie in 0..{N_MAX_CAP}")
        if not 0 <= self.k_max <= K_MAX_CAP:
            raise ValueError(f"k_max must lie in 0..{K_MAX_CAP}")

    def grid(self, rs=DEFAULT_R, lams=DEFAULT_LAMBDA):
        rs = (self.r,) if self.r is not None else rs
        lams = (self.lam,) if self.lam is not None else lams
        return [(r, lam) for r in rs for lam in lams]


def _orthogonality(b: Bounds) -> Report:
    rep = Report("orthogonality")
    for r, lam in b.grid():
        for n in range(b.n_max + 1):
            for l in range(n + 1):
                for side in "ab":
                    d = transforms.orthogonality_defect(n, l, r, lam, side)
                    rep.record(d == 0, f"n={n} l={l} r={r} lambda={lam} side={side} defect={d}")
    return rep


def _scaling(b: Bounds) -> Report:
    rep = Report("scaling")
    lams = (b.lam,) if b.lam is not None else (Fraction(1, 2), Fraction(2), Fraction(3),
                                               Fraction(-1), Fraction(7, 3))
    for lam in lams:
        for n in range(b.n_max + 1):
            for k in range(n + 1):
                factor = lam ** (n - k)
                ok2 = stirling.stirling2(n, k, lam) == factor * stirling.stirling2(n, k, 1)
                ok1 = (stirling.stirling1_unsigned_r(n, k, 0, lam)
                       == factor * stirling.stirling1_unsigned_r(n, k, 0, 1))
                rep.record(ok2 and ok1, f"n={n} k={k} lambda={lam}")
    return rep


def _random_sequence(rng: random.Random, length: int) -> list[Fraction]:
    return [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(length)]


def _inversion(b: Bounds, trials: int = 50, seed: int = 0) -> Report:
    rep = Report("inversion")
    rng = random.Random(seed)
    length_cap = min(b.n_max, 12) + 1
    for r, lam in b.grid():
        for _ in range(trials):
            c = _random_sequence(rng, rng.randint(1, length_cap))
            m = len(c) - 1
            a = transforms.stirling2_transform(c, r, lam)
            ok_c = transforms.stirling1_inverse_transform(a, r, lam) == tuple(c)
            a2 = transforms.dual_inverse_pair(c, m, r, lam)
            ok_d = transforms.dual_inverse_pair_inverse(a2, m, r, lam) == tuple(c)
            rep.record(ok_c and ok_d, f"r={r} lambda={lam} c={[format_scalar(v) for v in c]}")
    return rep


def _pf(b: Bounds) -> Report:
    rep = Report("pf")
    rs = (b.r,) if b.r is not None else (Fraction(0), Fraction(5))
    lams = (b.lam,) if b.lam is not None else (Fraction(1), Fraction(1, 3), Fraction(-2))
    for r in rs:
        for lam in lams:
            for k in range(b.k_max + 1):
                form = partial_fractions.pf_coefficients(k, r, lam)
                closed = tuple(Fraction((-1) ** l * math.comb(k, l)) / (lam**k * math.factorial(k))
                               for l in range(k + 1))
                ok = partial_fractions.pf_verify(k, r, lam) and form.coefficients == closed
                rep.record(ok, f"k={k} r={r} lambda={lam}")
    return rep


def _series(b: Bounds) -> Report:
    rep = Report("series")
    rs = (b.r,) if b.r is not None else (Fraction(0), Fraction(1), Fraction(2))
    lams = (b.lam,) if b.lam is not None else (Fraction(1, 2), Fraction(1), Fraction(2))
    N = max(b.n_max, 1)
    for r in rs:
        for lam in lams:
            for k in range(min(b.k_max, 8) + 1):
                if k > N:
                    continue
                trunc = series.recip_rising_series(k, r, lam, N)
                unsigned = [(-1) ** i * c for i, c in enumerate(trunc.coeffs)]
                ogf = series.ogf_coefficients(k, r, lam, N)
                egf = series.egf_coefficients(k, r, lam, N)
                residual = series.truncation_residual(k, r, lam, N)
                low = series.lowest_degree(residual)
                ok = unsigned == ogf == egf and (low == -1 or low >= N + 2)
                rep.record(ok, f"k={k} r={r} lambda={lam} N={N}")
    return rep


def _integral(b: Bounds) -> Report:
    rep = Report("integral")
    worst = 0.0
    a_grid = (0.5, 1.0, 2.0, 5.0)
    lams = (float(b.lam),) if b.lam is not None else (0.5, 1.0, 2.0)
    rs = (b.r,) if b.r is not None else (Fraction(0), Fraction(1), Fraction(2))
    for a in a_grid:
        for lam in lams:
            for k in range(1, min(b.k_max, 5) + 1):
                for r in rs:
                    spec = integrals.TailIntegralSpec(a, k, r, lam)
                    closed = integrals.tail_integral_closed_form(spec)
                    quad = integrals.tail_integral_quadrature(spec, tol=min(b.tol, 1e-10))
                    diff = abs(closed - quad)
                    worst = max(worst, diff)
                    rep.record(diff <= b.tol, f"a={a} k={k} r={r} lambda={lam} diff={diff:.3e}")
    rep.max_abs_diff = worst
    return rep


def _frullani(b: Bounds) -> Report:
    rep = Report("frullani")
    lams = (float(b.lam),) if b.lam is not None else (0.5, 1.0, 2.0)
    bs = (1e2, 1e3, 1e4, 1e5, 1e6)
    for lam in lams:
        if lam <= 0:
            raise ValueError("frullani suite needs lambda > 0")
        for k in range(1, min(b.k_max, 3) + 1):
            values = [abs(integrals.frullani_log_sum(x, k, lam)) for x in bs]
            ok = all(u > v for u, v in zip(values, values[1:]))
            rep.record(ok, f"k={k} lambda={lam} |values|={values}")
    return rep


SUITES: dict[str, Callable[[Bounds], Report]] = {
    "orthogonality": _orthogonality,
    "scaling": _scaling,
    "inversion": _inversion,
    "pf": _pf,
    "series": _series,
    "integral": _integral,
    "frullani": _frullani,
}


def verify_suite(name: str, bounds: Optional[Bounds] = None) -> Report:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}") from None
    return suite(bounds or Bounds())
