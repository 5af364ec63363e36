# test3_quadrature.py
import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial
from scipy import special as sp

from ualp.errors import DomainError, IntegrandEvaluationError
from ualp.quadrature import (
    _iterated_aitken,
    integrate_finite,
    integrate_oscillatory_semi_infinite,
    integrate_semi_infinite,
)
from ualp.ualp_types import IntegralResult, QuadratureSpec


def test_smooth_integrand():
    result = integrate_finite(np.exp, 0.0, 1.0)
    assert isinstance(result, IntegralResult)
    assert result.converged
    assert result.value == pytest.approx(math.e - 1.0, rel=1e-12)
    assert result.evaluations > 0


def test_endpoint_singularity():
    result = integrate_finite(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
    assert result.converged
    assert result.value == pytest.approx(2.0, rel=1e-10)


def test_log_singularity():
    result = integrate_finite(np.log, 0.0, 1.0)
    assert result.value == pytest.approx(-1.0, rel=1e-11)


def test_tolerance_is_respected():
    spec = QuadratureSpec(abs_tol=1e-4, rel_tol=1e-4)
    result = integrate_finite(np.cos, 0.0, 2.0, spec)
    assert result.converged
    assert result.error_estimate <= 1e-4 * max(1.0, abs(result.value))
    assert result.value == pytest.approx(math.sin(2.0), rel=1e-4)


def test_non_convergence_is_reported_not_raised():
    # an oscillation far too fast for three levels
    spec = QuadratureSpec(max_levels=3)
    result = integrate_finite(lambda x: np.sin(500.0 * x), 0.0, 1.0, spec)
    assert not result.converged
    assert result.error_estimate > 0


def test_non_finite_integrand_raises():
    with pytest.raises(IntegrandEvaluationError, match="NaN"):
        integrate_finite(lambda x: np.where(x > 0.5, np.nan, x), 0.0, 1.0)
    with pytest.raises(IntegrandEvaluationError, match="infinite"):
        integrate_finite(lambda x: np.where(x > 0.5, np.inf, x), 0.0, 1.0)


@pytest.mark.parametrize("degree", [0, 1, 4, 7, 10])
def test_polynomials_integrate_exactly(degree):
    coefficients = [1.0, -2.0, 0.5, 3.0, -1.0, 0.25, 2.0, -0.5, 1.0, 0.1, -1.5][: degree + 1]
    poly = Polynomial(coefficients)
    antiderivative = poly.integ()
    spec = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-13)
    result = integrate_finite(poly, -1.0, 1.0, spec)
    assert result.converged
    assert abs(result.value - (antiderivative(1.0) - antiderivative(-1.0))) <= 1e-13


@pytest.mark.parametrize("f, a, c, b", [
    (np.exp, 0.0, 0.3, 1.0),
    (np.cos, -1.0, 0.25, 2.0),
    (lambda x: 1.0 / (1.0 + x * x), -2.0, 1.5, 3.0),
])
def test_additivity(f, a, c, b):
    whole = integrate_finite(f, a, b)
    left = integrate_finite(f, a, c)
    right = integrate_finite(f, c, b)
    combined = whole.error_estimate + left.error_estimate + right.error_estimate
    assert abs(whole.value - (left.value + right.value)) <= combined + 1e-14


def test_arcsine_with_endpoint_offsets():
    # (1 - x^2)^{-1/2} on [-1, 1]; (1 - x)(1 + x) is the product of the two offsets
    result = integrate_finite(lambda x, from_a, from_b: 1.0 / np.sqrt(from_a * from_b), -1.0, 1.0,
                              endpoint_offsets=True)
    assert result.converged
    assert result.value == pytest.approx(math.pi, rel=1e-12)
    assert round(result.value, 8) == 3.14159265


def test_arcsine_from_rounded_abscissae_is_not_reported_converged():
    # 1 + x cannot be recovered from x near -1, so the estimate must own that error
    result = integrate_finite(lambda x: 1.0 / np.sqrt((1.0 - x) * (1.0 + x)), -1.0, 1.0)
    assert not result.converged
    assert result.error_estimate > QuadratureSpec().tolerance_for(result.value)
    assert result.value == pytest.approx(math.pi, abs=1e-6)


def test_endpoint_offsets_are_exact():
    seen = []

    def integrand(x, from_a, from_b):
        seen.append((x, from_a, from_b))
        return from_a

    result = integrate_finite(integrand, -1.0, 2.0, endpoint_offsets=True)
    assert result.value == pytest.approx(4.5, rel=1e-12)
    x, from_a, from_b = (np.concatenate(part) for part in zip(*seen))
    np.testing.assert_allclose(from_a + from_b, 3.0, rtol=1e-15)
    assert np.min(from_a) < 1e-100 and np.min(from_b) < 1e-100
    assert np.all((x >= -1.0) & (x <= 2.0))


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_bad_interval(a, b):
    with pytest.raises(DomainError):
        integrate_finite(np.exp, a, b)


def test_semi_infinite():
    result = integrate_semi_infinite(lambda x: np.exp(-x))
    assert result.converged
    assert result.value == pytest.approx(1.0, rel=1e-11)
    result = integrate_semi_infinite(lambda x: 1.0 / (1.0 + x * x))
    assert result.value == pytest.approx(0.5 * math.pi, rel=1e-10)


def test_iterated_aitken_on_alternating_series():
    partial_sums = np.cumsum([(-1) ** k / (k + 1.0) for k in range(12)]).tolist()
    assert _iterated_aitken(partial_sums) == pytest.approx(math.log(2.0), abs=1e-7)


def test_oscillatory_dirichlet_integral():
    # integral of sin(x)/x over [0, inf) is pi/2
    boundaries = math.pi * np.arange(0, 400)
    result = integrate_oscillatory_semi_infinite(lambda x: np.sinc(x / math.pi), boundaries)
    assert result.converged
    assert result.value == pytest.approx(0.5 * math.pi, abs=1e-7)


def test_oscillatory_bessel_integral():
    # integral of J_0 over [0, inf) is 1
    zeros = np.concatenate([[0.0], sp.jn_zeros(0, 300)])
    result = integrate_oscillatory_semi_infinite(lambda x: sp.j0(x), zeros)
    assert result.value == pytest.approx(1.0, abs=1e-7)


def test_oscillatory_boundaries_consumed_lazily():
    def boundaries():
        k = 0
        while True:
            yield math.pi * k
            k += 1

    result = integrate_oscillatory_semi_infinite(lambda x: np.sinc(x / math.pi), boundaries())
    assert result.value == pytest.approx(0.5 * math.pi, abs=1e-7)


def test_oscillatory_boundary_validation():
    with pytest.raises(DomainError):
        integrate_oscillatory_semi_infinite(np.cos, [1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        integrate_oscillatory_semi_infinite(np.cos, [0.0, 2.0, 2.0])
    with pytest.raises(DomainError):
        integrate_oscillatory_semi_infinite(np.cos, [])
