# test1_special_functions.py
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from ualp.errors import DomainError, RangeError
from ualp.series import binomial_series, power_series_power
from ualp.special import (
    BESSEL_X_MAX,
    bessel_generating_fn,
    bessel_generating_partial_sum,
    bessel_j,
    exp_checked,
    gamma_ratio,
    gegenbauer_c,
    log_gamma,
)


"""------------log-gamma------------"""

@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (2.0, 0.0),
    (0.5, 0.5 * math.log(math.pi)),
    (10.0, math.log(362880.0)),
])
def test_log_gamma_known_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.5, math.inf, math.nan])
def test_log_gamma_rejects_nonpositive_and_nonfinite(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-3, max_value=150.0))
def test_log_gamma_recurrence(x):
    assert log_gamma(x + 1.0) - log_gamma(x) == pytest.approx(math.log(x), abs=1e-12, rel=1e-12)


def test_log_gamma_large_argument_matches_mpmath():
    assert log_gamma(170.5) == pytest.approx(float(mpmath.loggamma(170.5)), rel=1e-14)


def test_gamma_ratio():
    assert gamma_ratio(6.0, 3.0) == pytest.approx(60.0, rel=1e-13)
    assert gamma_ratio(3.5, 1.5) == pytest.approx(2.5 * 1.5, rel=1e-13)


def test_gamma_ratio_overflow_is_a_range_error():
    with pytest.raises(RangeError, match="overflows"):
        gamma_ratio(400.0, 1.0)


def test_exp_checked():
    assert exp_checked(math.log(2.5)) == pytest.approx(2.5, rel=1e-15)
    assert exp_checked(-800.0) == 0.0
    with pytest.raises(RangeError):
        exp_checked(710.0)
    # RangeError is still an ArithmeticError for callers outside the package
    with pytest.raises(ArithmeticError):
        exp_checked(1e4, "moment")


"""------------Bessel J------------"""

@pytest.mark.parametrize("nu, x", [
    (0, 1.0), (1, 2.0), (1.5, 2.0), (0, 0.5), (3, 7.3), (0.25, 15.0), (2, 40.0), (5, 99.0), (0, 100.0),
])
def test_bessel_j_matches_scipy(nu, x):
    assert bessel_j(nu, x) == pytest.approx(float(sp.jv(nu, x)), abs=1e-10)


def test_bessel_j_reference_values():
    assert bessel_j(0, 1.0) == pytest.approx(0.7651976865579666, abs=1e-15)
    assert bessel_j(1, 2.0) == pytest.approx(0.5767248077568734, abs=1e-15)


def test_bessel_j_half_integer_order_closed_form():
    x = 2.0
    expected = math.sqrt(2.0 / (math.pi * x)) * (math.sin(x) / x - math.cos(x))
    assert bessel_j(1.5, x) == pytest.approx(expected, abs=1e-14)


def test_bessel_j_at_zero():
    assert bessel_j(0, 0.0) == 1.0
    assert bessel_j(2.5, 0.0) == 0.0


def test_bessel_j_domain_and_range():
    with pytest.raises(DomainError):
        bessel_j(-0.5, 1.0)
    with pytest.raises(DomainError):
        bessel_j(1, -1.0)
    with pytest.raises(RangeError):
        bessel_j(0, BESSEL_X_MAX + 1.0)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.floats(min_value=0.1, max_value=30.0))
def test_bessel_three_term_recurrence(n, x):
    lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x)
    assert lhs == pytest.approx(2.0 * n / x * bessel_j(n, x), abs=1e-9)


@pytest.mark.parametrize("x, t", [(1.0, 0.5), (2.5, 1.3), (4.0, -0.7)])
def test_bessel_generating_partial_sum_converges(x, t):
    assert bessel_generating_partial_sum(x, t, 30) == pytest.approx(bessel_generating_fn(x, t), rel=1e-12)


def test_bessel_generating_rejects_zero_t():
    with pytest.raises(DomainError):
        bessel_generating_fn(1.0, 0.0)
    with pytest.raises(DomainError):
        bessel_generating_partial_sum(1.0, 0.0, 3)


"""------------Gegenbauer------------"""

def test_gegenbauer_low_degrees():
    assert gegenbauer_c(0, 0.7, 0.3) == 1.0
    assert gegenbauer_c(1, 0.5, 0.3) == pytest.approx(0.3)
    # C_2^{3/2}(x) = (3/2)(5x^2 - 1)
    assert gegenbauer_c(2, 1.5, 0.5) == pytest.approx(0.375, abs=1e-15)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
@pytest.mark.parametrize("lam", [0.5, 1.5, 2.8, 5.7])
def test_gegenbauer_matches_scipy(n, lam):
    xs = np.linspace(-1.0, 1.0, 21)
    expected = sp.eval_gegenbauer(n, lam, xs)
    np.testing.assert_allclose(gegenbauer_c(n, lam, xs), expected, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("lam", [0.5, 1.5, 2.8])
@pytest.mark.parametrize("x", [-0.9, 0.0, 0.4])
def test_gegenbauer_matches_generating_function_coefficients(lam, x):
    # (1 - 2xv + v^2)^{-lam} = sum_n C_n^lam(x) v^n
    coefficients = power_series_power([1.0, -2.0 * x, 1.0], -lam, 12)
    recurrence = [gegenbauer_c(n, lam, x) for n in range(13)]
    np.testing.assert_allclose(recurrence, coefficients, rtol=1e-12, atol=1e-12)


def test_gegenbauer_domain():
    with pytest.raises(DomainError):
        gegenbauer_c(2, 1.5, 1.5)
    with pytest.raises(DomainError):
        gegenbauer_c(2, 0.0, 0.5)
    with pytest.raises(DomainError):
        gegenbauer_c(-1, 1.0, 0.5)


"""------------Truncated power series------------"""

def test_binomial_series_coefficients():
    coefficients = binomial_series(-2.5, 5)
    expected = [float(mpmath.binomial(-2.5, k)) for k in range(6)]
    np.testing.assert_allclose(coefficients, expected, rtol=1e-14)


def test_power_series_power_of_polynomial():
    # (1 + v)^2 squared is (1 + v)^4
    np.testing.assert_allclose(power_series_power([1.0, 2.0, 1.0], 2.0, 6), [1, 4, 6, 4, 1, 0, 0], atol=1e-13)


def test_power_series_power_rejects_bad_leading_coefficient():
    with pytest.raises(DomainError):
        power_series_power([0.0, 1.0], 0.5, 3)
