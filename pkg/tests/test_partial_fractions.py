import random
from fractions import Fraction

import pytest

from lamstirling.errors import DegenerateLambda, PoleHit
from lamstirling.exact_core import rising_factorial_eval
from lamstirling.partial_fractions import (
    pf_coefficients,
    pf_evaluate,
    pf_recombine,
    pf_verify,
    reciprocal_rising,
)
from oracles import apart_coefficients


@pytest.mark.parametrize("k, r, lam, expected", [
    (1, 0, 1, [1, -1]),
    (2, 0, 1, [Fraction(1, 2), -1, Fraction(1, 2)]),
    (2, 5, 3, [Fraction(1, 18), Fraction(-1, 9), Fraction(1, 18)]),
])
def test_coefficient_examples(k, r, lam, expected):
    assert list(pf_coefficients(k, r, lam).coefficients) == expected


@pytest.mark.parametrize("k, r, lam", [(3, 0, 1), (4, 5, Fraction(1, 3)), (5, Fraction(7, 2), -2), (6, 1, Fraction(2, 5))])
def test_coefficients_match_sympy_apart(k, r, lam):
    assert list(pf_coefficients(k, r, lam).coefficients) == apart_coefficients(k, r, lam)


@pytest.mark.parametrize("k, r, lam, x, expected", [
    (1, 0, 1, 1, Fraction(1, 2)),
    (2, 0, 1, 2, Fraction(1, 24)),
    (0, 3, 7, 1, Fraction(1, 4)),
])
def test_evaluate_examples(k, r, lam, x, expected):
    assert pf_evaluate(pf_coefficients(k, r, lam), x) == expected


@pytest.mark.parametrize("k, r, lam", [(1, 0, 1), (8, 2, Fraction(1, 3)), (5, 0, -2)])
def test_verify_examples(k, r, lam):
    assert pf_verify(k, r, lam)


def test_verify_grid():
    for k in range(11):
        for r in (0, 5, Fraction(3, 4)):
            for lam in (1, Fraction(1, 3), -2):
                assert pf_verify(k, r, lam)


def test_verify_detects_wrong_coefficients():
    form = pf_coefficients(3, 1, 2)
    bad = type(form)(form.k, form.r, form.lam, form.coefficients[:-1] + (form.coefficients[-1] * 2,))
    assert pf_recombine(bad) != pf_recombine(form)


def test_coefficients_sum_to_zero_and_ignore_r():
    for k in range(1, 10):
        for lam in (1, Fraction(-5, 2)):
            base = pf_coefficients(k, 0, lam).coefficients
            assert sum(base) == 0
            for r in (1, Fraction(9, 7), -3):
                assert pf_coefficients(k, r, lam).coefficients == base


def test_evaluate_matches_direct_reciprocal_at_random_points():
    rng = random.Random(7)
    for k, r, lam in [(0, 1, 1), (3, 2, Fraction(1, 2)), (6, 0, -1), (4, Fraction(5, 3), 3)]:
        form = pf_coefficients(k, r, lam)
        poles = set(form.poles())
        points = 0
        while points < 20:
            x = Fraction(rng.randint(-200, 200), rng.randint(1, 13))
            if x in poles:
                continue
            assert pf_evaluate(form, x) == 1 / rising_factorial_eval(x + r, k + 1, lam)
            assert pf_evaluate(form, x) == reciprocal_rising(x, k, r, lam)
            points += 1


def test_pole_hit():
    form = pf_coefficients(2, 1, 1)
    with pytest.raises(PoleHit):
        pf_evaluate(form, -2)


def test_zero_lambda():
    with pytest.raises(DegenerateLambda):
        pf_coefficients(2, 0, 0)
    with pytest.raises(DegenerateLambda):
        pf_verify(2, 0, 0)
