# ualp/__init__.py
__version__ = "0.1.0"

from .angular import angular_eigenvalue, effective_order, ode_residual, ode_residual_x, polar_solution_params
from .core import VerificationRunner, verify_identity_grid
from .errors import (
    ArgumentExcursionError,
    DomainError,
    GridEntryError,
    IntegrandEvaluationError,
    RangeError,
    UALPError,
    UnknownIdentityError,
)
from .identities import (
    bessel_integral_closed_form,
    bessel_integral_numeric,
    gaussian_generating_closed_form,
    gaussian_generating_numeric,
    main_integral_closed_form,
    main_integral_numeric,
    norm_numeric,
    orthogonality_closed_form,
    orthogonality_numeric,
    power_exp_closed_form,
    power_exp_numeric,
    verify_point,
    weighted_norm_numeric,
)
from .polynomials import (
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
from .quadrature import integrate_finite, integrate_oscillatory_semi_infinite, integrate_semi_infinite
from .series import binomial_series, power_series_power
from .special import (
    bessel_generating_fn,
    bessel_generating_partial_sum,
    bessel_j,
    exp_checked,
    gamma_ratio,
    gegenbauer_c,
    log_gamma,
)
from .ualp_types import (
    BesselIntegralParams,
    GaussianGeneratingParams,
    IdentityName,
    IntegralResult,
    MainIntegralParams,
    OrthogonalityParams,
    PolyParams,
    PowerExpParams,
    QuadratureMethod,
    QuadratureSpec,
    ReportDocument,
    RingPotentialParams,
    VerificationRecord,
)

# the spelling used by the moment-integral formula's callers
power_exp_integral_closed_form = power_exp_closed_form

__all__ = [
    "__version__",
    "angular_eigenvalue", "effective_order", "ode_residual", "ode_residual_x", "polar_solution_params",
    "VerificationRunner", "verify_identity_grid",
    "ArgumentExcursionError", "DomainError", "GridEntryError", "IntegrandEvaluationError", "RangeError",
    "UALPError", "UnknownIdentityError",
    "bessel_integral_closed_form", "bessel_integral_numeric", "gaussian_generating_closed_form",
    "gaussian_generating_numeric", "main_integral_closed_form", "main_integral_numeric", "norm_numeric",
    "orthogonality_closed_form", "orthogonality_numeric", "power_exp_closed_form", "power_exp_integral_closed_form",
    "power_exp_numeric", "verify_point", "weighted_norm_numeric",
    "ualp_coefficients", "ualp_eval", "ualp_eval_gegenbauer", "ualp_eval_polar", "ualp_eval_printed_series",
    "ualp_generating_fn", "ualp_generating_fn_by_offset", "ualp_norm_sq", "ualp_shifted_integrand",
    "ualp_weighted_norm_sq",
    "integrate_finite", "integrate_oscillatory_semi_infinite", "integrate_semi_infinite",
    "binomial_series", "power_series_power",
    "bessel_generating_fn", "bessel_generating_partial_sum", "bessel_j", "exp_checked", "gamma_ratio", "gegenbauer_c",
    "log_gamma",
    "BesselIntegralParams", "GaussianGeneratingParams", "IdentityName", "IntegralResult", "MainIntegralParams",
    "OrthogonalityParams", "PolyParams", "PowerExpParams", "QuadratureMethod", "QuadratureSpec", "ReportDocument",
    "RingPotentialParams", "VerificationRecord",
]
