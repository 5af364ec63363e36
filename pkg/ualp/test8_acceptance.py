# test8_acceptance.py
#
# End-to-end checks over the compiled-in grids, closed form against quadrature.
import math

import numpy as np
import pytest

from ualp.angular import effective_order, ode_residual, polar_solution_params
from ualp.cli import EXIT_OK, main
from ualp.core import verify_identity_grid
from ualp.errors import DomainError
from ualp.grids import preset_grid
from ualp.identities import (
    bessel_integral_closed_form,
    bessel_integral_numeric,
    main_integral_closed_form,
    norm_numeric,
    orthogonality_closed_form,
    orthogonality_numeric,
    power_exp_closed_form,
    power_exp_numeric,
    weighted_norm_numeric,
)
from ualp.polynomials import (
    ualp_eval,
    ualp_eval_gegenbauer,
    ualp_norm_sq,
    ualp_weighted_norm_sq,
)
from ualp.series import binomial_series
from ualp.ualp_types import (
    BesselIntegralParams,
    MainIntegralParams,
    OrthogonalityParams,
    PolyParams,
    RingPotentialParams,
)


def test_main_integral_grid():
    grid = preset_grid("main-integral")
    assert len(grid) == 144
    records = verify_identity_grid("main-integral", grid, abs_tol=1e-7, rel_tol=1e-7)
    failed = [(record.parameters, record.abs_diff, record.annotation) for record in records if not record.passed]
    assert failed == []


def test_orthogonality_grid():
    for entry in preset_grid("orthogonality"):
        p = OrthogonalityParams(**entry)
        value = orthogonality_numeric(p).value
        if p.n_l == p.n_k:
            assert value == pytest.approx(orthogonality_closed_form(p.m_prime, p.n_l, p.n_k), rel=1e-9), entry
        else:
            assert abs(value) <= 1e-9, entry


@pytest.mark.parametrize("m_prime", [0.5, 1.0, 2.3])
def test_norm_identities(m_prime):
    for n in range(6):
        params = PolyParams(m_prime=m_prime, n=n)
        assert norm_numeric(params).value == pytest.approx(ualp_norm_sq(params), rel=1e-8)
        assert weighted_norm_numeric(params).value == pytest.approx(ualp_weighted_norm_sq(params), rel=1e-8)


def test_series_matches_gegenbauer_everywhere():
    xs = np.linspace(-1.0, 1.0, 21)
    checked = 0
    for m_prime in (0.0, 0.5, 1.0, 2.3, 5.5):
        for n in range(11):
            params = PolyParams(m_prime=m_prime, n=n)
            reference = ualp_eval_gegenbauer(params, xs)
            scale = max(1.0, float(np.max(np.abs(reference))))
            np.testing.assert_allclose(ualp_eval(params, xs), reference, rtol=1e-10, atol=1e-10 * scale)
            checked += xs.size
    assert checked == 1155


def test_angular_equation_is_solved():
    theta = np.linspace(0.1, math.pi - 0.1, 50)
    for m_prime in (0.0, 1.0, 2.3):
        for n in (0, 1, 3):
            assert ode_residual(PolyParams(m_prime=m_prime, n=n), theta) <= 1e-5
    ring = RingPotentialParams(b=4.29, m=1)
    assert effective_order(ring) == pytest.approx(2.3)
    for n in (0, 1, 3):
        assert ode_residual(polar_solution_params(ring, n), theta) <= 1e-5


@pytest.mark.parametrize("n, m, alpha, z", [(1, 0, 1, 1), (2, 0, 1, 2), (4, 0.5, 1.5, 0.7), (3, 0, 2, 1)])
def test_bessel_integral(n, m, alpha, z):
    p = BesselIntegralParams(n=n, m=m, alpha=alpha, z=z)
    closed = bessel_integral_closed_form(p)
    numeric = bessel_integral_numeric(p).value
    assert abs(numeric - closed) <= max(1e-6, 1e-6 * abs(closed))


def test_bessel_integral_guard():
    with pytest.raises(DomainError):
        bessel_integral_numeric(BesselIntegralParams(n=1, m=1, alpha=1, z=1))


@pytest.mark.parametrize("m, n, beta", [(1.0, 2.0, 1.0), (0.0, 1.0, 3.0), (2.5, 2.0, 0.8)])
def test_gaussian_moment(m, n, beta):
    assert power_exp_numeric(m, n, beta).value == pytest.approx(power_exp_closed_form(m, n, beta), rel=1e-9)


@pytest.mark.parametrize("m_prime", [0.0, 1.0])
def test_derivation_coefficients(m_prime):
    t = 0.3
    for n_l in range(7):
        for n_k in range(7 - n_l):
            k_params = PolyParams(m_prime=m_prime, n=n_k)
            expanded = (
                ualp_norm_sq(k_params)
                * t ** k_params.l_prime
                * binomial_series(-(k_params.l_prime + m_prime + 1.0), n_l)[n_l]
            )
            closed = main_integral_closed_form(MainIntegralParams(m_prime=m_prime, n_l=n_l, n_k=n_k, t=t))
            assert expanded == pytest.approx(closed, rel=1e-9)


def test_verify_reports_are_byte_identical(tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    argv = ["verify", "--identity", "main-integral", "--grid", "default", "--no-timestamp"]
    assert main(argv + ["--output", str(first)]) == EXIT_OK
    assert main(argv + ["--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
