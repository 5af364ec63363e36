# test2_polynomials.py
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import chebyshev
from pydantic import ValidationError
from scipy import special as sp

from ualp.errors import ArgumentExcursionError, DomainError
from ualp.polynomials import (
    ualp_coefficients,
    ualp_eval,
    ualp_eval_gegenbauer,
    ualp_eval_polar,
    ualp_eval_printed_series,
    ualp_generating_fn,
    ualp_generating_fn_by_offset,
    ualp_norm_sq,
    ualp_shifted_integrand,
    ualp_weighted_norm_sq,
)
from ualp.ualp_types import PolyParams


def P(m_prime, n):
    return PolyParams(m_prime=m_prime, n=n)


"""------------Parameters------------"""

def test_poly_params_degree():
    assert P(2.5, 3).l_prime == 5.5


@pytest.mark.parametrize("fields", [
    {"m_prime": -0.1, "n": 0},
    {"m_prime": 1.0, "n": -1},
    {"m_prime": math.inf, "n": 0},
    {"m_prime": 1.0, "n": 0, "l_prime": 1.0},
])
def test_poly_params_rejects_invalid(fields):
    with pytest.raises(ValidationError):
        PolyParams(**fields)


"""------------Series evaluation------------"""

def test_eval_known_values():
    assert ualp_eval(P(0, 1), 0.5) == pytest.approx(0.5, abs=1e-15)
    assert ualp_eval(P(1, 0), 0.6) == pytest.approx(0.8, abs=1e-15)
    # P_2^0 = (3x^2 - 1)/2
    assert ualp_eval(P(0, 2), 0.3) == pytest.approx(0.5 * (3 * 0.09 - 1), abs=1e-15)
    expected = math.exp(math.lgamma(6.0) - 2.5 * math.log(2.0) - math.lgamma(3.5))
    assert ualp_eval(P(2.5, 0), 0.0) == pytest.approx(expected, rel=1e-13)


def test_eval_is_vectorized():
    xs = np.linspace(-1.0, 1.0, 7)
    values = ualp_eval(P(0, 1), xs)
    assert isinstance(values, np.ndarray)
    np.testing.assert_allclose(values, xs, atol=1e-15)


def test_eval_endpoints():
    assert ualp_eval(P(0, 4), 1.0) == pytest.approx(1.0, abs=1e-14)
    assert ualp_eval(P(0, 3), -1.0) == pytest.approx(-1.0, abs=1e-14)
    assert ualp_eval(P(1.7, 2), 1.0) == 0.0


@pytest.mark.parametrize("x", [1.5, -1.0000001, math.nan])
def test_eval_rejects_points_outside_domain(x):
    with pytest.raises(DomainError, match=r"\[-1, 1\]"):
        ualp_eval(P(1, 0), x)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [0, 1, 2, 5, 8])
def test_integer_order_matches_lpmv(m, n):
    xs = np.linspace(-0.95, 0.95, 19)
    # scipy includes the Condon-Shortley phase; the family here does not
    expected = (-1) ** m * sp.lpmv(m, m + n, xs)
    np.testing.assert_allclose(ualp_eval(P(m, n), xs), expected, rtol=1e-10, atol=1e-12 * np.max(np.abs(expected)))


@settings(max_examples=100, deadline=None)
@given(
    st.floats(min_value=0.0, max_value=6.0),
    st.integers(min_value=0, max_value=12),
    st.floats(min_value=-1.0, max_value=1.0),
)
def test_parity(m_prime, n, x):
    params = P(m_prime, n)
    value = ualp_eval(params, x)
    mirrored = ualp_eval(params, -x)
    assert mirrored == pytest.approx((-1) ** n * value, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("m_prime", [0.5, 1.3, 2.3])
@pytest.mark.parametrize("n", [0, 3, 7])
def test_chebyshev_degree(m_prime, n):
    # P_{l'}^{m'} / (1 - x^2)^{m'/2} is a polynomial of degree n
    params = P(m_prime, n)

    def reduced(xs):
        return ualp_eval(params, xs) / (1.0 - xs ** 2) ** (m_prime / 2.0)

    interpolant = chebyshev.chebinterpolate(reduced, n)
    fresh = np.linspace(-0.97, 0.93, 50)
    expected = reduced(fresh)
    np.testing.assert_allclose(
        chebyshev.chebval(fresh, interpolant), expected, rtol=1e-9, atol=1e-9 * np.max(np.abs(expected))
    )


"""------------Independent routes------------"""

@pytest.mark.parametrize("m_prime", [0.0, 0.5, 1.0, 2.3, 4.7])
def test_series_matches_gegenbauer(m_prime):
    xs = np.linspace(-1.0, 1.0, 21)
    for n in range(11):
        params = P(m_prime, n)
        series = ualp_eval(params, xs)
        gegenbauer = ualp_eval_gegenbauer(params, xs)
        scale = max(1.0, float(np.max(np.abs(gegenbauer))))
        np.testing.assert_allclose(series, gegenbauer, rtol=1e-10, atol=1e-10 * scale)


@pytest.mark.parametrize("m_prime", [0.0, 2.5])
@pytest.mark.parametrize("n", [15, 20, 30, 40, 60])
def test_series_stays_accurate_at_high_degree(m_prime, n):
    xs = np.linspace(-1.0, 1.0, 21)
    params = P(m_prime, n)
    gegenbauer = ualp_eval_gegenbauer(params, xs)
    scale = float(np.max(np.abs(gegenbauer)))
    np.testing.assert_allclose(ualp_eval(params, xs), gegenbauer, rtol=1e-10, atol=1e-10 * scale)


def test_series_high_degree_point_values():
    assert ualp_eval(P(0, 200), 0.3) == pytest.approx(float(sp.eval_legendre(200, 0.3)), rel=1e-10)
    value = ualp_eval(P(2.5, 40), -0.7)
    assert value == pytest.approx(ualp_eval_gegenbauer(P(2.5, 40), -0.7), rel=1e-10)
    assert value == pytest.approx(-494.213, rel=1e-5)


def test_polar_series_stays_accurate_at_high_degree():
    params = P(1.5, 45)
    theta = np.linspace(0.05, math.pi - 0.05, 17)
    expected = ualp_eval_gegenbauer(params, np.cos(theta))
    np.testing.assert_allclose(
        ualp_eval_polar(params, theta), expected, rtol=1e-9, atol=1e-10 * float(np.max(np.abs(expected)))
    )


@pytest.mark.parametrize("m_prime", [0.0, 0.5, 1.0, 3.2])
@pytest.mark.parametrize("x", [-0.8, 0.0, 0.35, 0.99])
def test_coefficients_match_series(m_prime, x):
    coefficients = ualp_coefficients(m_prime, x, 10)
    expected = [ualp_eval(P(m_prime, n), x) for n in range(11)]
    scale = max(1.0, max(abs(value) for value in expected))
    np.testing.assert_allclose(coefficients, expected, rtol=1e-10, atol=1e-11 * scale)


def test_polar_evaluation_matches_x_evaluation():
    params = P(2.3, 4)
    theta = np.linspace(0.0, math.pi, 31)
    np.testing.assert_allclose(
        ualp_eval_polar(params, theta), ualp_eval(params, np.clip(np.cos(theta), -1.0, 1.0)), rtol=1e-9, atol=1e-12
    )


def test_polar_evaluation_keeps_precision_near_pole():
    # P_{1}^{1}(cos theta) = sin theta
    assert ualp_eval_polar(P(1, 0), 1e-9) == pytest.approx(1e-9, rel=1e-12)


def test_polar_evaluation_domain():
    with pytest.raises(DomainError):
        ualp_eval_polar(P(1, 0), -0.1)


def test_printed_series_disagrees_with_generating_function():
    params = P(0.5, 3)
    x = 0.4
    assert ualp_eval(params, x) == pytest.approx(ualp_eval_gegenbauer(params, x), rel=1e-12)
    assert ualp_eval_printed_series(params, x) != pytest.approx(ualp_eval_gegenbauer(params, x), rel=1e-3)


"""------------Generating functions------------"""

@pytest.mark.parametrize("m_prime", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("x, v", [(0.3, 0.4), (-0.7, 0.25), (0.9, -0.3)])
def test_generating_function_by_offset_sums_the_family(m_prime, x, v):
    partial = sum(ualp_eval(P(m_prime, n), x) * v ** n for n in range(80))
    assert ualp_generating_fn_by_offset(m_prime, x, v) == pytest.approx(partial, rel=1e-12)


def test_generating_function_includes_power_of_v():
    m_prime, x, v = 1.5, 0.2, 0.3
    assert ualp_generating_fn(m_prime, x, v) == pytest.approx(
        v ** m_prime * ualp_generating_fn_by_offset(m_prime, x, v), rel=1e-14
    )


def test_generating_function_domain():
    with pytest.raises(DomainError):
        ualp_generating_fn_by_offset(0.5, 0.3, 1.0)
    with pytest.raises(DomainError):
        ualp_generating_fn(0.5, 0.3, -0.2)
    # integer order accepts negative v
    assert math.isfinite(ualp_generating_fn(2.0, 0.3, -0.2))


"""------------Norms------------"""

def test_norm_closed_forms():
    assert ualp_norm_sq(P(1, 0)) == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert ualp_norm_sq(P(0, 2)) == pytest.approx(0.4, rel=1e-14)
    assert ualp_weighted_norm_sq(P(1, 0)) == pytest.approx(2.0, rel=1e-14)
    with pytest.raises(DomainError):
        ualp_weighted_norm_sq(P(0, 3))


"""------------Composed argument------------"""

def test_shifted_integrand_zeroth_order():
    # P_0^0 = 1, so the integrand is D^{-1/2}
    x = np.linspace(-1.0, 1.0, 5)
    t = 0.5
    expected = (1.0 + t * t - 2.0 * t * x) ** -0.5
    np.testing.assert_allclose(ualp_shifted_integrand(P(0, 0), x, t), expected, rtol=1e-14)


def test_shifted_integrand_stays_finite_at_endpoints():
    for t in (0.1, 0.5, 0.9):
        values = ualp_shifted_integrand(P(2.3, 4), np.array([-1.0, 1.0]), t)
        assert np.all(np.isfinite(values))


def test_shifted_integrand_rejects_bad_t():
    with pytest.raises(DomainError):
        ualp_shifted_integrand(P(1, 1), 0.3, 1.0)


def test_argument_excursion_error_is_an_assertion():
    assert issubclass(ArgumentExcursionError, AssertionError)
