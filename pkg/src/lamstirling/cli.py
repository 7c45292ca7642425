"""Command-line front end.

Usage::

    lamstirling table --kind s2 --nmax 5 --lambda 1/2 --r 1 --format json
    lamstirling verify --suite orthogonality --nmax 10 --lambda 2 --r 1
    lamstirling series recip-rising --k 2 --lambda 1 --r 0 --x 10 --terms 60
    lamstirling pf --k 3 --lambda 1/3 --r 5
    lamstirling integrate --a 1 --k 1 --lambda 1 --r 0

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import integrals, partial_fractions, series, stirling
from .errors import ConvergenceDomain, LambdaStirlingError
from .exact_core import format_scalar, scalar
from .verify import K_MAX_CAP, N_MAX_CAP, SUITES, Bounds, verify_suite


def _rational(text: str) -> Fraction:
    try:
        return scalar(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational 'p/q', integer or decimal, got {text!r}") from exc


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from exc
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamstirling",
        description="Exact lambda-Stirling numbers, inverse relations, series and tail integrals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="tabulate a Stirling triangle")
    p.add_argument("--kind", required=True, choices=["s2", "s1u", "s1s"])
    p.add_argument("--nmax", required=True, type=_nonneg_int)
    p.add_argument("--lambda", dest="lam", required=True, type=_rational)
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--format", default="csv", choices=["csv", "json"])

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("--nmax", type=_nonneg_int, default=12)
    p.add_argument("--kmax", type=_nonneg_int, default=10)
    p.add_argument("--lambda", dest="lam", type=_rational)
    p.add_argument("--r", type=_rational)
    p.add_argument("--tol", type=_finite_float, default=1e-9)

    p = sub.add_parser("series", help="series coefficients and evaluation")
    p.add_argument("which", choices=["recip-rising", "inverse-power", "ogf", "egf", "shifted"])
    p.add_argument("--k", required=True, type=_nonneg_int)
    p.add_argument("--lambda", dest="lam", required=True, type=_rational)
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--x", type=_finite_float)
    p.add_argument("--terms", type=_nonneg_int, default=60)

    p = sub.add_parser("pf", help="partial fraction coefficients")
    p.add_argument("--k", required=True, type=_nonneg_int)
    p.add_argument("--lambda", dest="lam", required=True, type=_rational)
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--format", default="plain", choices=["plain", "json"])

    p = sub.add_parser("integrate", help="closed-form tail integral vs quadrature")
    p.add_argument("--a", required=True, type=_finite_float)
    p.add_argument("--k", required=True, type=_nonneg_int)
    p.add_argument("--lambda", dest="lam", required=True, type=_finite_float)
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--tol", type=_finite_float, default=1e-10)
    return parser


def _cmd_table(args, out: TextIO) -> int:
    tri = stirling.triangle(args.kind, args.nmax, args.r, args.lam)
    out.write(tri.to_csv() if args.format == "csv" else tri.to_json() + "\n")
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    bounds = Bounds(n_max=args.nmax, k_max=args.kmax, r=args.r, lam=args.lam, tol=args.tol)
    report = verify_suite(args.suite, bounds)
    out.write(report.summary() + "\n")
    return 0 if report.passed else 1


def _series_payload(args) -> dict:
    k, r, lam, N = args.k, args.r, args.lam, args.terms
    value: Optional[series.SeriesValue] = None
    if args.which == "recip-rising":
        coeffs = series.recip_rising_series(k, r, lam, N).coeffs
        if args.x is not None:
            value = series.recip_rising_series_eval(k, r, lam, args.x, N)
    elif args.which == "inverse-power":
        coeffs = series.first_kind_series(k, r, lam, N).coeffs
        if args.x is not None:
            value = series.power_to_recip_rising(k, r, lam, args.x, N)
    elif args.which == "ogf":
        coeffs = series.ogf_coefficients(k, r, lam, N)
    elif args.which == "egf":
        coeffs = series.egf_coefficients(k, r, lam, N)
    else:
        if r != 0:
            raise ConvergenceDomain("the shifted identity is defined for r = 0 only")
        if k < 1:
            raise ValueError("the shifted identity needs k >= 1")
        rows = stirling.cached_rows(stirling.Kind.FIRST_UNSIGNED, N + 1, 0, lam)
        coeffs = [rows[n + 1][k] for n in range(k - 1, N + 1)]
        if args.x is not None:
            value = series.shifted_identity_eval(k, lam, args.x, N)
    return {
        "kind": args.which,
        "k": k,
        "r": format_scalar(r),
        "lambda": format_scalar(lam),
        "N": N,
        "coeffs": [format_scalar(c) for c in coeffs],
        "value": None if value is None else value.value,
        "remainder_estimate": None if value is None else value.remainder_estimate,
    }


def _cmd_series(args, out: TextIO) -> int:
    out.write(json.dumps(_series_payload(args)) + "\n")
    return 0


def _cmd_pf(args, out: TextIO) -> int:
    form = partial_fractions.pf_coefficients(args.k, args.r, args.lam)
    texts = [format_scalar(c) for c in form.coefficients]
    if args.format == "json":
        out.write(json.dumps(texts) + "\n")
    else:
        out.write("".join(t + "\n" for t in texts))
    return 0


def _cmd_integrate(args, out: TextIO) -> int:
    spec = integrals.TailIntegralSpec(args.a, args.k, args.r, args.lam)
    closed = integrals.tail_integral_closed_form(spec)
    quad = integrals.tail_integral_quadrature(spec, args.tol)
    payload = {
        "a": spec.a,
        "k": spec.k,
        "r": format_scalar(spec.r),
        "lambda": spec.lam,
        "closed_form": closed,
        "quadrature": quad,
        "abs_diff": abs(closed - quad),
    }
    out.write(json.dumps(payload) + "\n")
    return 0


COMMANDS = {
    "table": _cmd_table,
    "verify": _cmd_verify,
    "series": _cmd_series,
    "pf": _cmd_pf,
    "integrate": _cmd_integrate,
}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        try:
            if args.nmax > N_MAX_CAP:
                parser.error(f"argument --nmax: at most {N_MAX_CAP} for verify suites")
            if args.kmax > K_MAX_CAP:
                parser.error(f"argument --kmax: at most {K_MAX_CAP} for verify suites")
        except SystemExit as exc:
            return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (LambdaStirlingError, ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
