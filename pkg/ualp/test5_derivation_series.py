# test5_derivation_series.py
#
# Summing the composed-argument integrand over n_l with weight u^{n_l} collapses,
# via the generating function, to N(k') t^{k'} (1 + u)^{-(k'+m'+1)}. Its
# binomial coefficients must reproduce the closed form term by term.
import math

import numpy as np
import pytest

from ualp.identities import main_integral_closed_form
from ualp.polynomials import ualp_eval, ualp_generating_fn_by_offset, ualp_norm_sq
from ualp.quadrature import integrate_finite
from ualp.series import binomial_series
from ualp.ualp_types import MainIntegralParams, PolyParams, QuadratureSpec

MAX_TOTAL_OFFSET = 6
T = 0.3


def _series_coefficient(m_prime, n_l, n_k, t):
    k_params = PolyParams(m_prime=m_prime, n=n_k)
    exponent = -(k_params.l_prime + m_prime + 1.0)
    return ualp_norm_sq(k_params) * t ** k_params.l_prime * binomial_series(exponent, n_l)[n_l]


@pytest.mark.parametrize("m_prime", [0.0, 1.0])
def test_double_series_coefficients_match_closed_form(m_prime):
    for n_l in range(MAX_TOTAL_OFFSET + 1):
        for n_k in range(MAX_TOTAL_OFFSET + 1 - n_l):
            expected = main_integral_closed_form(MainIntegralParams(m_prime=m_prime, n_l=n_l, n_k=n_k, t=T))
            assert _series_coefficient(m_prime, n_l, n_k, T) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("m_prime", [0.0, 1.0])
def test_truncated_double_series_sums_agree(m_prime):
    u, v = 0.2, 0.15
    closed = 0.0
    expanded = 0.0
    for n_l in range(MAX_TOTAL_OFFSET + 1):
        for n_k in range(MAX_TOTAL_OFFSET + 1 - n_l):
            weight = u ** n_l * v ** n_k
            closed += weight * main_integral_closed_form(MainIntegralParams(m_prime=m_prime, n_l=n_l, n_k=n_k, t=T))
            expanded += weight * _series_coefficient(m_prime, n_l, n_k, T)
    assert expanded == pytest.approx(closed, rel=1e-9)


@pytest.mark.parametrize("m_prime", [0.0, 1.0, 1.5])
@pytest.mark.parametrize("n_k", [0, 2])
def test_generating_function_integral(m_prime, n_k):
    # integral over x of sum_{n_l} u^{n_l} P_{l'}(y) D^{-(l'+1)/2} times P_{k'}(x)
    u = 0.2
    k_params = PolyParams(m_prime=m_prime, n=n_k)

    def integrand(x):
        shift = (1.0 - T) ** 2 + 2.0 * T * (1.0 - x)
        root = np.sqrt(shift)
        argument = np.clip((x * T - 1.0) / root, -1.0, 1.0)
        summed = np.array([ualp_generating_fn_by_offset(m_prime, a, u / r) for a, r in zip(argument, root)])
        return summed * shift ** (-(m_prime + 1.0) / 2.0) * ualp_eval(k_params, x)

    result = integrate_finite(integrand, -1.0, 1.0, QuadratureSpec(abs_tol=1e-11, rel_tol=1e-11))
    expected = ualp_norm_sq(k_params) * T ** k_params.l_prime * (1.0 + u) ** (-(k_params.l_prime + m_prime + 1.0))
    assert result.value == pytest.approx(expected, rel=1e-8)


def test_binomial_coefficients_alternate():
    coefficients = binomial_series(-3.0, 6)
    assert np.all(np.sign(coefficients) == [(-1) ** k for k in range(7)])
    assert coefficients[6] == pytest.approx(math.comb(8, 6), rel=1e-14)
