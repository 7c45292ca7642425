from fractions import Fraction

import pytest
import sympy

from lamstirling.errors import ConvergenceDomain, DegenerateLambda
from lamstirling.series import (
    egf_coefficients,
    first_kind_series,
    levin_u,
    lowest_degree,
    ogf_coefficients,
    power_to_recip_rising,
    recip_rising_series,
    recip_rising_series_eval,
    shifted_identity_eval,
    truncation_residual,
)
from lamstirling.stirling import stirling1_unsigned_r

Y = sympy.Symbol("y")


def sympy_recip_series(k, r, lam, N):
    """Coefficients of y^(n+1), n = k..N, of y^(k+1) / prod(1 + (r + l lam) y).

    Each factor is replaced by its geometric series truncated at y^N.
    """
    r, lam = sympy.Rational(str(r)), sympy.Rational(str(lam))
    expr = Y ** (k + 1)
    for l in range(k + 1):
        geometric = sum((-(r + l * lam) * Y) ** j for j in range(N + 1))
        expr = sympy.expand(expr * geometric)
    poly = sympy.Poly(expr, Y)
    return [Fraction(str(poly.coeff_monomial(Y ** (n + 1)))) for n in range(k, N + 1)]


def direct(x, k, r, lam):
    out = 1.0
    for l in range(k + 1):
        out *= x + r + l * lam
    return 1.0 / out


class TestRecipRisingSeries:
    def test_examples(self):
        assert recip_rising_series(1, 0, 1, 3).coeffs == (1, -1, 1)
        assert recip_rising_series(3, 0, 1, 3).coeffs == (1,)
        assert recip_rising_series(1, 0, 2, 4).coeffs == (1, -2, 4, -8)

    @pytest.mark.parametrize("k, r, lam", [(0, 2, 1), (2, 0, Fraction(1, 2)), (3, 1, 2), (4, Fraction(3, 2), -1)])
    def test_matches_sympy_expansion(self, k, r, lam):
        assert list(recip_rising_series(k, r, lam, 12).coeffs) == sympy_recip_series(k, r, lam, 12)

    def test_degenerate(self):
        with pytest.raises(DegenerateLambda):
            recip_rising_series(1, 0, 0, 3)

    def test_truncation_identity(self):
        for k in range(9):
            for N in range(k, 21):
                for r, lam in [(0, 1), (1, Fraction(1, 2)), (2, 2)]:
                    residual = truncation_residual(k, r, lam, N)
                    low = lowest_degree(residual)
                    assert low == -1 or low >= N + 2


class TestRecipRisingEval:
    def test_examples(self):
        assert recip_rising_series_eval(2, 0, 1, 10.0, 60).value == pytest.approx(1 / 1320, abs=1e-12)
        assert recip_rising_series_eval(0, 0, 5, 2.0, 0).value == 0.5
        assert recip_rising_series_eval(1, 1, 1, 8.0, 80).value == pytest.approx(1 / 90, abs=1e-10)

    def test_domain(self):
        with pytest.raises(ConvergenceDomain):
            recip_rising_series_eval(2, 0, 1, 2.0, 10)
        # x must clear the largest pole offset r + k lam, not just k lam
        with pytest.raises(ConvergenceDomain):
            recip_rising_series_eval(1, 5, 1, 3.0, 10)
        with pytest.raises(ConvergenceDomain):
            recip_rising_series_eval(1, 0, -1, 3.0, 10)

    @pytest.mark.parametrize("k, r, lam, x", [(2, 0, 1, 5.0), (3, 1, Fraction(1, 2), 4.0), (1, 2, 1, 7.5)])
    def test_error_decreases_and_is_bounded_by_estimate(self, k, r, lam, x):
        target = direct(x, k, float(r), float(lam))
        errors = []
        for N in range(k + 5, 80):
            result = recip_rising_series_eval(k, r, lam, x, N)
            err = abs(result.value - target)
            errors.append(err)
            if err > 1e-15:
                assert err <= 10 * result.remainder_estimate
        tail = [e for e in errors if e > 1e-15]
        assert all(a >= b for a, b in zip(tail, tail[1:]))


class TestGeneratingFunctions:
    def test_ogf_examples(self):
        assert ogf_coefficients(2, 0, 1, 4) == [1, 3, 7]
        assert ogf_coefficients(0, 0, 1, 3) == [1, 0, 0, 0]
        assert ogf_coefficients(1, 1, 1, 3) == [1, 3, 7]

    def test_egf_examples(self):
        assert egf_coefficients(1, 0, 1, 4) == [1, 1, 1, 1]
        assert egf_coefficients(0, 2, 1, 3) == [1, 2, 4, 8]
        assert egf_coefficients(2, 0, 2, 4) == [1, 6, 28]

    def test_all_routes_agree(self):
        for k in range(7):
            for r in (0, 1, 2):
                for lam in (Fraction(1, 2), 1, 2):
                    signed = recip_rising_series(k, r, lam, 15).coeffs
                    unsigned = [(-1) ** i * c for i, c in enumerate(signed)]
                    assert ogf_coefficients(k, r, lam, 15) == unsigned
                    assert egf_coefficients(k, r, lam, 15) == unsigned

    def test_ogf_r_nonzero_closed_form(self):
        # {n+1 brace 2}_{1,1} = 2^n - 1
        assert ogf_coefficients(1, 1, 1, 10) == [2**n - 1 for n in range(1, 11)]


def test_first_kind_inversion_window():
    # substituting each reciprocal-rising series into the first-kind expansion
    # must leave exactly (1/x)^(k+1)
    for r, lam in [(0, 1), (0, 2), (1, Fraction(1, 2)), (3, 1)]:
        for k in range(6):
            weights = first_kind_series(k, r, lam, 12)
            for n in range(k, 13):
                total = sum(weights.coeff(j) * recip_rising_series(j, r, lam, n).coeff(n)
                            for j in range(k, n + 1))
                assert total == (1 if n == k else 0)


class TestPowerToRecipRising:
    def test_examples(self):
        assert power_to_recip_rising(0, 0, 1, 2.0, 40).value == pytest.approx(0.5, abs=1e-10)
        assert power_to_recip_rising(0, 0, 3, 1.0, 0).value == 1.0
        assert power_to_recip_rising(1, 0, 1, 3.0, 60).value == pytest.approx(1 / 9, abs=1e-8)

    def test_plain_partial_sum_telescopes(self):
        # terms are 2/(n(n+1)(n+2)(n+3)); the sum to N is 1/9 - (2/3)/((N+1)(N+2)(N+3))
        for N in (1, 5, 60):
            raw = power_to_recip_rising(1, 0, 1, 3.0, N, accelerate=False)
            assert raw.partial_sum == pytest.approx(1 / 9 - (2 / 3) / ((N + 1) * (N + 2) * (N + 3)), rel=1e-14)

    @pytest.mark.parametrize("k, r, lam, x, tol", [
        (2, 0, 1, 3.0, 1e-9), (1, 1, 1, 2.0, 1e-7), (3, 2, Fraction(1, 2), 1.5, 1e-7), (0, 1, 1, 1.0, 1e-14),
    ])
    def test_converges_to_inverse_power(self, k, r, lam, x, tol):
        result = power_to_recip_rising(k, r, lam, x, 100)
        assert result.value == pytest.approx(x ** -(k + 1), abs=tol)

    def test_adaptive(self):
        result = power_to_recip_rising(1, 0, 2, 5.0, tol=1e-12)
        assert result.value == pytest.approx(1 / 25, abs=1e-11)

    def test_domain(self):
        for args in [(1, 0, 0, 3.0, 10), (1, 0, 1, -1.0, 10), (1, -2, 1, 1.0, 10)]:
            with pytest.raises(ConvergenceDomain):
                power_to_recip_rising(*args)


class TestShiftedIdentity:
    def test_examples(self):
        assert shifted_identity_eval(1, 1, 2.0, 60).value == pytest.approx(1.0, abs=1e-8)
        assert shifted_identity_eval(1, 1, 3.0, 80).value == pytest.approx(0.5, abs=1e-8)
        assert shifted_identity_eval(2, 1, 3.0, 120).value == pytest.approx(0.25, abs=1e-6)

    def test_k1_weights_are_lambda_factorials(self):
        lam = Fraction(3, 2)
        for n in range(10):
            assert stirling1_unsigned_r(n + 1, 1, 0, lam) == lam**n * sympy.factorial(n)

    def test_plain_partial_sum(self):
        # sum_{n<=N} 1/((n+1)(n+2)) = 1 - 1/(N+2)
        raw = shifted_identity_eval(1, 1, 2.0, 60, accelerate=False)
        assert raw.value == pytest.approx(1 - 1 / 62, rel=1e-14)

    def test_domain(self):
        with pytest.raises(ConvergenceDomain):
            shifted_identity_eval(1, 1, 1.0, 10)
        with pytest.raises(ValueError):
            shifted_identity_eval(0, 1, 3.0, 10)


def test_levin_exact_on_telescoping_series():
    terms = [Fraction(1, (n + 1) * (n + 2)) for n in range(6)]
    assert levin_u(terms) == 1
    assert levin_u([Fraction(1), Fraction(0)]) is None
