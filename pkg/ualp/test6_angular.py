# test6_angular.py
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from ualp.angular import (
    angular_eigenvalue,
    effective_order,
    ode_residual,
    ode_residual_x,
    polar_solution_params,
)
from ualp.errors import DomainError
from ualp.ualp_types import PolyParams, RingPotentialParams

THETA_GRID = np.linspace(0.1, math.pi - 0.1, 50)


@pytest.mark.parametrize("b, m, expected", [(0.0, 2, 2.0), (3.0, 1, 2.0), (-1.0, 1, 0.0), (4.29, 1, math.sqrt(5.29))])
def test_effective_order(b, m, expected):
    assert effective_order(RingPotentialParams(b=b, m=m)) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("m", range(8))
def test_effective_order_reduces_to_integer_order(m):
    assert effective_order(RingPotentialParams(b=0.0, m=m)) == m


def test_ring_potential_barrier():
    with pytest.raises(ValidationError):
        RingPotentialParams(b=-2.0, m=1)


@pytest.mark.parametrize("m_prime, n, expected", [(0, 1, 2.0), (2, 0, 6.0), (1.5, 2, 15.75)])
def test_angular_eigenvalue(m_prime, n, expected):
    assert angular_eigenvalue(m_prime, n) == pytest.approx(expected)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.0, max_value=20.0))
def test_angular_eigenvalue_increases_with_n(m_prime):
    values = [angular_eigenvalue(m_prime, n) for n in range(21)]
    assert all(later > earlier for earlier, later in zip(values, values[1:]))


def test_polar_solution_params():
    params = polar_solution_params(RingPotentialParams(b=4.29, m=1), 3)
    assert params.n == 3
    assert params.m_prime == pytest.approx(2.3)


@pytest.mark.parametrize("m_prime, n, threshold", [(0, 1, 1e-6), (1, 0, 1e-6), (2.3, 3, 1e-5)])
def test_ode_residual(m_prime, n, threshold):
    assert ode_residual(PolyParams(m_prime=m_prime, n=n), THETA_GRID) <= threshold


def test_ode_residual_in_x():
    x_grid = np.linspace(-0.95, 0.95, 39)
    for m_prime, n in [(0, 2), (1, 1), (2.3, 3)]:
        assert ode_residual_x(PolyParams(m_prime=m_prime, n=n), x_grid) <= 1e-5


def test_ode_residual_grid_validation():
    params = PolyParams(m_prime=1, n=1)
    with pytest.raises(DomainError):
        ode_residual(params, [0.01, 1.0])
    with pytest.raises(DomainError):
        ode_residual(params, [1.0, math.pi])
    with pytest.raises(DomainError):
        ode_residual(params, [])
    with pytest.raises(DomainError):
        ode_residual_x(params, [0.995])
