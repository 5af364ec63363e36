# test4_identities.py
import asyncio
import math

import pytest
from pydantic import ValidationError

from ualp.core import VerificationRunner, verify_identity_grid
from ualp.errors import DomainError, GridEntryError, RangeError, UnknownIdentityError
from ualp.grids import DIVERGENT_GRID, preset_grid
from ualp.identities import (
    bessel_integral_closed_form,
    bessel_integral_numeric,
    bessel_segment_boundaries,
    gaussian_generating_closed_form,
    gaussian_generating_numeric,
    main_integral_closed_form,
    main_integral_numeric,
    norm_numeric,
    orthogonality_closed_form,
    orthogonality_numeric,
    parse_grid_entry,
    power_exp_closed_form,
    power_exp_numeric,
    verify_point,
    weighted_norm_numeric,
)
from ualp.polynomials import ualp_norm_sq, ualp_weighted_norm_sq
from ualp.special import bessel_j
from ualp.ualp_types import (
    BesselIntegralParams,
    IdentityName,
    MainIntegralParams,
    OrthogonalityParams,
    PolyParams,
    QuadratureMethod,
    QuadratureSpec,
    ReportDocument,
    VerificationRecord,
)


"""------------Closed forms------------"""

def test_orthogonality_closed_form():
    assert orthogonality_closed_form(1.5, 2, 3) == 0.0
    assert orthogonality_closed_form(1.0, 0, 0) == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert orthogonality_closed_form(2.3, 4, 4) == pytest.approx(ualp_norm_sq(PolyParams(m_prime=2.3, n=4)), rel=1e-13)


@pytest.mark.parametrize("params, expected", [
    ({"m_prime": 1, "n_l": 0, "n_k": 0, "t": 0.5}, 2.0 / 3.0),
    ({"m_prime": 0, "n_l": 1, "n_k": 0, "t": 0.5}, -2.0),
    ({"m_prime": 0, "n_l": 0, "n_k": 0, "t": 0.5}, 2.0),
    ({"m_prime": 1, "n_l": 0, "n_k": 0, "t": 0.3}, 0.4),
])
def test_main_integral_closed_form(params, expected):
    assert main_integral_closed_form(MainIntegralParams(**params)) == pytest.approx(expected, rel=1e-13)


def test_main_integral_closed_form_vanishes_as_t_goes_to_zero():
    p = MainIntegralParams(m_prime=0.5, n_l=1, n_k=2, t=1e-12)
    assert abs(main_integral_closed_form(p)) < 1e-20


def test_bessel_integral_closed_form():
    assert bessel_integral_closed_form(BesselIntegralParams(n=1, m=0, alpha=1, z=1)) == pytest.approx(
        0.7651976865579666, rel=1e-14
    )
    assert bessel_integral_closed_form(BesselIntegralParams(n=2, m=0, alpha=1, z=2)) == pytest.approx(
        0.5767248077568734 / 2.0, rel=1e-13
    )
    x = 2.0
    j_three_halves = math.sqrt(2.0 / (math.pi * x)) * (math.sin(x) / x - math.cos(x))
    expected = 2 ** 0.5 * math.gamma(1.5) / 2 ** 1.5 * j_three_halves
    assert bessel_integral_closed_form(BesselIntegralParams(n=3, m=0.5, alpha=2, z=1)) == pytest.approx(
        expected, rel=1e-12
    )


def test_bessel_integral_closed_form_rejects_negative_order():
    with pytest.raises(DomainError):
        bessel_integral_closed_form(BesselIntegralParams(n=1, m=0.5, alpha=1, z=1))


@pytest.mark.parametrize("m, n, beta, expected", [
    (1.0, 2.0, 1.0, 0.5),
    (0.0, 1.0, 3.0, 1.0 / 3.0),
    (2.5, 2.0, 0.8, math.gamma(1.75) / (2.0 * 0.8 ** 1.75)),
])
def test_power_exp_closed_form(m, n, beta, expected):
    assert power_exp_closed_form(m, n, beta) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("m, n, beta", [(1.0, 2.0, 0.0), (1.0, -2.0, 1.0), (-1.0, 2.0, 1.0)])
def test_power_exp_closed_form_domain(m, n, beta):
    with pytest.raises(DomainError):
        power_exp_closed_form(m, n, beta)


def test_gaussian_generating_closed_form_reduces_to_gaussian_moment():
    # exponent collapses to alpha t/2 - alpha (x^2 + z^2)/(2t)
    m, alpha, z, t = 1.0, 2.0, 0.5, 1.5
    moment = power_exp_closed_form(2.0 * m + 1.0, 2.0, alpha / (2.0 * t))
    prefactor = math.exp(0.5 * alpha * t - 0.5 * alpha * z * z / t)
    assert gaussian_generating_closed_form(m, alpha, z, t) == pytest.approx(prefactor * moment, rel=1e-13)


"""------------Quadratures------------"""

@pytest.mark.parametrize("method", list(QuadratureMethod))
def test_norm_numeric(method):
    params = PolyParams(m_prime=2.3, n=3)
    result = norm_numeric(params, QuadratureSpec(method=method))
    assert result.value == pytest.approx(ualp_norm_sq(params), rel=1e-8)


@pytest.mark.parametrize("m_prime", [0.5, 1.0, 2.3])
def test_weighted_norm_numeric(m_prime):
    params = PolyParams(m_prime=m_prime, n=2)
    result = weighted_norm_numeric(params)
    assert result.value == pytest.approx(ualp_weighted_norm_sq(params), rel=1e-8)


def test_weighted_norm_numeric_rejects_zero_order():
    with pytest.raises(DomainError):
        weighted_norm_numeric(PolyParams(m_prime=0, n=1))


@pytest.mark.parametrize("m_prime, n", [(0.5, 0), (1.0, 3), (2.3, 5)])
def test_weighted_norm_numeric_error_meets_tolerance(m_prime, n):
    # abs_tol governs here, so doubling the half-interval error must still fit inside it
    spec = QuadratureSpec(abs_tol=1e-6, rel_tol=1e-15)
    result = weighted_norm_numeric(PolyParams(m_prime=m_prime, n=n), spec)
    assert result.converged
    assert result.error_estimate <= spec.tolerance_for(result.value)


def test_orthogonality_numeric_off_diagonal():
    result = orthogonality_numeric(OrthogonalityParams(m_prime=1.5, n_l=2, n_k=3))
    assert abs(result.value) <= 1e-9


def test_main_integral_numeric_hand_values():
    assert main_integral_numeric(MainIntegralParams(m_prime=0, n_l=0, n_k=0, t=0.5)).value == pytest.approx(2.0, rel=1e-9)
    assert main_integral_numeric(MainIntegralParams(m_prime=1, n_l=0, n_k=0, t=0.5)).value == pytest.approx(
        2.0 / 3.0, rel=1e-9
    )
    assert main_integral_numeric(MainIntegralParams(m_prime=0, n_l=1, n_k=0, t=0.5)).value == pytest.approx(
        -2.0, rel=1e-9
    )


def test_main_integral_numeric_non_integer_order():
    p = MainIntegralParams(m_prime=2.5, n_l=3, n_k=2, t=0.8)
    closed = main_integral_closed_form(p)
    assert main_integral_numeric(p).value == pytest.approx(closed, rel=1e-7, abs=1e-7)


def test_bessel_segment_boundaries():
    p = BesselIntegralParams(n=2, m=0, alpha=1.0, z=2.0)
    boundaries = bessel_segment_boundaries(p, 20)
    assert boundaries[0] == 0.0
    assert len(boundaries) == 21
    radii = (boundaries[1:] ** 2 + p.z ** 2) ** 0.5
    for radius in radii[:5]:
        assert abs(bessel_j(p.n, p.alpha * radius)) < 1e-10


def test_bessel_integral_numeric():
    p = BesselIntegralParams(n=4, m=0.5, alpha=1.5, z=0.7)
    closed = bessel_integral_closed_form(p)
    assert bessel_integral_numeric(p).value == pytest.approx(closed, rel=1e-6, abs=1e-6)


def test_bessel_integral_numeric_guard():
    with pytest.raises(DomainError, match="diverges"):
        bessel_integral_numeric(BesselIntegralParams(n=1, m=1, alpha=1, z=1))


def test_power_exp_numeric():
    assert power_exp_numeric(2.5, 2.0, 0.8).value == pytest.approx(power_exp_closed_form(2.5, 2.0, 0.8), rel=1e-9)


def test_gaussian_generating_numeric():
    m, alpha, z, t = 1.3, 1.0, 2.0, 0.7
    result = gaussian_generating_numeric(m, alpha, z, t)
    assert result.value == pytest.approx(gaussian_generating_closed_form(m, alpha, z, t), rel=1e-9)


"""------------Grid entries and points------------"""

def test_parse_grid_entry():
    params = parse_grid_entry("main-integral", {"m_prime": 1, "n_l": 0, "n_k": 2, "t": 0.5})
    assert isinstance(params, MainIntegralParams)
    assert params.n_k == 2


@pytest.mark.parametrize("entry", [
    {"m_prime": 1, "n_l": 0, "n_k": 2},
    {"m_prime": 1, "n_l": 0, "n_k": 2, "t": 1.5},
    {"m_prime": 1, "n_l": 0, "n_k": 2, "t": 0.5, "extra": 1},
    [1, 0, 2, 0.5],
])
def test_parse_grid_entry_rejects_malformed(entry):
    with pytest.raises(GridEntryError):
        parse_grid_entry("main-integral", entry)


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError, match="unknown-thing"):
        parse_grid_entry("unknown-thing", {})


def test_verify_point_passes():
    record = verify_point(IdentityName.POWER_EXP, {"m": 1, "n": 2, "beta": 1}, None, 1e-7, 1e-7)
    assert record.passed
    assert record.annotation is None
    assert record.closed_form == pytest.approx(0.5)
    assert record.parameters == {"m": 1.0, "n": 2.0, "beta": 1.0}


def test_verify_point_records_failures():
    record = verify_point(IdentityName.BESSEL_INTEGRAL, {"n": 1, "m": 1, "alpha": 1, "z": 1}, None, 1e-6, 1e-6)
    assert not record.passed
    assert record.numeric is None
    assert record.annotation.startswith("DomainError")


def test_power_exp_closed_form_overflow_is_a_range_error():
    with pytest.raises(RangeError, match="overflows"):
        power_exp_closed_form(300.0, 1.0, 1e-5)


def test_verify_point_records_overflow():
    record = verify_point(IdentityName.POWER_EXP, {"m": 300, "n": 1, "beta": 1e-5}, None, 1e-7, 1e-7)
    assert not record.passed
    assert record.closed_form is None
    assert record.annotation.startswith("RangeError")


def test_verify_point_off_diagonal_scale():
    record = verify_point(IdentityName.ORTHOGONALITY, {"m_prime": 1.5, "n_l": 1, "n_k": 4}, None, 1e-12, 1e-9)
    assert record.closed_form == 0.0
    assert record.passed
    assert record.rel_diff is not None and record.rel_diff <= 1e-9


"""------------Grid runner------------"""

def test_verify_identity_grid_preserves_order_and_isolates_failures():
    grid = preset_grid("bessel-integral", DIVERGENT_GRID)
    records = verify_identity_grid("bessel-integral", grid, abs_tol=1e-6, rel_tol=1e-6, max_workers=3)
    assert [record.parameters["n"] for record in records] == [entry["n"] for entry in grid]
    assert all(record.passed for record in records[:-1])
    assert not records[-1].passed
    assert "DomainError" in records[-1].annotation


def test_verify_identity_grid_survives_overflowing_point():
    grid = [{"m": 1, "n": 2, "beta": 1}, {"m": 300, "n": 1, "beta": 1e-5}]
    records = verify_identity_grid("power-exp", grid, abs_tol=1e-7, rel_tol=1e-7)
    assert len(records) == 2
    assert records[0].passed
    assert not records[1].passed
    assert "RangeError" in records[1].annotation


def test_verify_identity_grid_empty():
    assert verify_identity_grid("main-integral", []) == []


def test_verify_identity_grid_rejects_before_running():
    with pytest.raises(UnknownIdentityError):
        verify_identity_grid("unknown-thing", [{}])
    with pytest.raises(GridEntryError):
        verify_identity_grid("norm", [{"m_prime": 1, "n": 0}, {"m_prime": -1, "n": 0}])


def test_runner_status_callback_sees_every_point():
    seen = []

    async def status_callback(index, record):
        seen.append((index, record.passed))

    runner = VerificationRunner(max_workers=2)
    grid = preset_grid("power-exp")
    records = asyncio.run(runner.run_grid("power-exp", grid, status_callback=status_callback))
    assert sorted(index for index, _ in seen) == list(range(len(grid)))
    assert all(record.passed for record in records)


def test_runner_rejects_zero_workers():
    with pytest.raises(ValueError):
        VerificationRunner(max_workers=0)


"""------------Reports------------"""

def test_report_summary_must_match_records():
    record = VerificationRecord(identity_name=IdentityName.NORM, parameters={"m_prime": 1.0, "n": 0}, passed=True)
    report = ReportDocument.from_records("0.1.0", None, IdentityName.NORM, {"abs_tol": 1e-7}, [record])
    assert report.summary.total == 1 and report.summary.passed == 1 and report.all_passed
    with pytest.raises(ValidationError):
        ReportDocument(
            tool_version="0.1.0",
            identity_name=IdentityName.NORM,
            tolerance_config={},
            records=[record],
            summary={"total": 1, "passed": 0, "failed": 1},
        )
