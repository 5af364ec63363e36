# ualp/identities.py
"""Closed forms of the integral identities and the quadratures that check them.

Every closed form is assembled in log space from `log_gamma` with its sign
tracked separately. `verify_point` pairs a closed form with its numeric value
and turns any package or arithmetic error into a failed record, so one bad
point never stops a sweep.
"""
import math
from typing import Any, Callable, Dict, Mapping, Optional, Tuple, Type, Union

import numpy as np
from pydantic import BaseModel, ValidationError
from scipy import special as sp

from .errors import DomainError, GridEntryError, UALPError, UnknownIdentityError
from .polynomials import (
    ualp_eval,
    ualp_eval_polar,
    ualp_norm_sq,
    ualp_shifted_integrand,
    ualp_weighted_norm_sq,
)
from .quadrature import integrate_finite, integrate_oscillatory_semi_infinite, integrate_semi_infinite
from .special import bessel_j, exp_checked, gamma_ratio, log_gamma
from .ualp_types import (
    BesselIntegralParams,
    GaussianGeneratingParams,
    IdentityName,
    IdentityParams,
    IntegralResult,
    MainIntegralParams,
    OrthogonalityParams,
    PolyParams,
    PowerExpParams,
    QuadratureMethod,
    QuadratureSpec,
    VerificationRecord,
)

_LN2 = math.log(2.0)


def _scaled(result: IntegralResult, factor: float) -> IntegralResult:
    return result.model_copy(update={
        "value": factor * result.value,
        "error_estimate": abs(factor) * result.error_estimate,
    })


"""------------Norms and orthogonality------------"""

def norm_numeric(params: PolyParams, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    """integral of P^2 over [-1, 1], in x or in theta depending on spec.method."""
    spec = spec or QuadratureSpec()
    if spec.method is QuadratureMethod.POLAR_TANH_SINH:
        return integrate_finite(lambda theta: ualp_eval_polar(params, theta) ** 2 * np.sin(theta), 0.0, math.pi, spec)
    return integrate_finite(lambda x: ualp_eval(params, x) ** 2, -1.0, 1.0, spec)


def weighted_norm_numeric(params: PolyParams, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    """integral of P^2 / (1 - x^2) over [-1, 1].

    With x = cos(theta) this is 2 * integral_0^{pi/2} P(cos theta)^2 / sin(theta),
    where the pole at theta = 0 is resolved at full relative precision.
    """
    if params.m_prime <= 0:
        raise DomainError("the weighted norm diverges for m' = 0")
    spec = spec or QuadratureSpec()
    # doubling the half-interval result must keep its error inside max(abs_tol, rel_tol |value|)
    half_spec = spec.model_copy(update={"abs_tol": 0.5 * spec.abs_tol})

    def integrand(theta: np.ndarray) -> np.ndarray:
        return ualp_eval_polar(params, theta) ** 2 / np.sin(theta)

    return _scaled(integrate_finite(integrand, 0.0, 0.5 * math.pi, half_spec), 2.0)


def orthogonality_closed_form(m_prime: float, n_l: int, n_k: int) -> float:
    """(2/(2l'+1)) Gamma(l'+m'+1)/Gamma(l'-m'+1) when n_l == n_k, else 0."""
    params = OrthogonalityParams(m_prime=m_prime, n_l=n_l, n_k=n_k)
    if params.n_l != params.n_k:
        return 0.0
    l_prime = params.m_prime + params.n_l
    return 2.0 / (2.0 * l_prime + 1.0) * gamma_ratio(l_prime + params.m_prime + 1.0, l_prime - params.m_prime + 1.0)


def orthogonality_numeric(p: OrthogonalityParams, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    spec = spec or QuadratureSpec()
    l_params = PolyParams(m_prime=p.m_prime, n=p.n_l)
    k_params = PolyParams(m_prime=p.m_prime, n=p.n_k)
    if spec.method is QuadratureMethod.POLAR_TANH_SINH:
        return integrate_finite(
            lambda theta: ualp_eval_polar(l_params, theta) * ualp_eval_polar(k_params, theta) * np.sin(theta),
            0.0, math.pi, spec,
        )
    return integrate_finite(lambda x: ualp_eval(l_params, x) * ualp_eval(k_params, x), -1.0, 1.0, spec)


"""------------Integral with the composed argument------------"""

def main_integral_closed_form(p: MainIntegralParams) -> float:
    """(2 t^{k'}/(2k'+1)) (-1)^{n_l} Gamma(k'+l'+1) / (Gamma(n_l+1) Gamma(n_k+1))."""
    l_prime = p.m_prime + p.n_l
    k_prime = p.m_prime + p.n_k
    log_magnitude = (
        k_prime * math.log(p.t)
        + _LN2
        - math.log(2.0 * k_prime + 1.0)
        + log_gamma(k_prime + l_prime + 1.0)
        - log_gamma(p.n_l + 1.0)
        - log_gamma(p.n_k + 1.0)
    )
    sign = -1.0 if p.n_l % 2 else 1.0
    return sign * exp_checked(log_magnitude, "main integral")


def main_integral_numeric(p: MainIntegralParams, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    l_params = p.l_params
    k_params = p.k_params

    def integrand(x: np.ndarray) -> np.ndarray:
        return ualp_shifted_integrand(l_params, x, p.t) * ualp_eval(k_params, x)

    return integrate_finite(integrand, -1.0, 1.0, spec)


"""------------Bessel integral------------"""

def bessel_integral_closed_form(p: BesselIntegralParams) -> float:
    """2^m Gamma(m+1) / (alpha^{m+1} z^{n-m-1}) * J_{n-m-1}(alpha z)."""
    order = p.n - p.m - 1.0
    if order < 0:
        raise DomainError(f"Bessel order n - m - 1 = {order!r} is negative; only orders >= 0 are supported")
    log_magnitude = p.m * _LN2 + log_gamma(p.m + 1.0) - (p.m + 1.0) * math.log(p.alpha) - order * math.log(p.z)
    return exp_checked(log_magnitude, "Bessel integral prefactor") * bessel_j(order, p.alpha * p.z)


def bessel_segment_boundaries(p: BesselIntegralParams, segments: int) -> np.ndarray:
    """0 followed by the x where alpha*sqrt(x^2 + z^2) hits successive zeros of J_n."""
    scaled = p.alpha * p.z
    zeros = sp.jn_zeros(p.n, segments + int(scaled / math.pi) + 2)
    radii = zeros[zeros > scaled] / p.alpha
    return np.concatenate([[0.0], np.sqrt(radii * radii - p.z * p.z)])[: segments + 1]


def bessel_integral_numeric(p: BesselIntegralParams, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    """integral_0^inf J_n(alpha r) / r^n * x^{2m+1} dx with r = sqrt(x^2 + z^2).

    The integrand decays like x^{2m+1/2-n}; it converges (conditionally) only
    for n > 2m + 1/2, and other parameter sets are refused.
    """
    spec = spec or QuadratureSpec()
    if not p.is_convergent:
        raise DomainError(f"integral diverges: needs n > 2m + 1/2, got n={p.n}, m={p.m!r}")

    def integrand(x: np.ndarray) -> np.ndarray:
        radius = np.hypot(x, p.z)
        return sp.jv(p.n, p.alpha * radius) / radius ** p.n * x ** (2.0 * p.m + 1.0)

    boundaries = bessel_segment_boundaries(p, spec.max_segments)
    return integrate_oscillatory_semi_infinite(integrand, boundaries, spec)


"""------------Moment integrals------------"""

def power_exp_closed_form(m: float, n: float, beta: float) -> float:
    """integral_0^inf x^m exp(-beta x^n) dx = Gamma(gamma) / (n beta^gamma), gamma = (m+1)/n."""
    p = PowerExpParams(m=m, n=n, beta=beta)
    if p.beta <= 0 or p.n <= 0:
        raise DomainError(f"needs beta > 0 and n > 0, got beta={p.beta!r}, n={p.n!r}")
    gamma = (p.m + 1.0) / p.n
    if gamma <= 0:
        raise DomainError(f"diverges at 0: needs (m+1)/n > 0, got {gamma!r}")
    return exp_checked(log_gamma(gamma) - math.log(p.n) - gamma * math.log(p.beta), "power-exp moment")


def power_exp_numeric(m: float, n: float, beta: float, spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    p = PowerExpParams(m=m, n=n, beta=beta)
    if p.beta <= 0 or p.n <= 0 or p.m <= -1:
        raise DomainError(f"integral diverges for m={p.m!r}, n={p.n!r}, beta={p.beta!r}")

    def integrand(x: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            return np.exp(p.m * np.log(x) - p.beta * x ** p.n)

    return integrate_semi_infinite(integrand, spec)


def gaussian_generating_closed_form(m: float, alpha: float, z: float, t: float) -> float:
    """exp(alpha t/2 - alpha z^2/(2t)) 2^m Gamma(m+1) t^{m+1} / alpha^{m+1}."""
    p = GaussianGeneratingParams(m=m, alpha=alpha, z=z, t=t)
    log_magnitude = (
        0.5 * p.alpha * p.t
        - 0.5 * p.alpha * p.z * p.z / p.t
        + p.m * _LN2
        + log_gamma(p.m + 1.0)
        + (p.m + 1.0) * (math.log(p.t) - math.log(p.alpha))
    )
    return exp_checked(log_magnitude, "Gaussian generating integral")


def gaussian_generating_numeric(m: float, alpha: float, z: float, t: float,
                                spec: Optional[QuadratureSpec] = None) -> IntegralResult:
    """integral_0^inf x^{2m+1} exp[(alpha r/2)(t/r - r/t)] dx, r = sqrt(x^2 + z^2)."""
    p = GaussianGeneratingParams(m=m, alpha=alpha, z=z, t=t)

    def integrand(x: np.ndarray) -> np.ndarray:
        radius = np.hypot(x, p.z)
        with np.errstate(over="ignore"):
            exponent = 0.5 * p.alpha * (p.t - radius * radius / p.t)
        return np.exp((2.0 * p.m + 1.0) * np.log(x) + exponent)

    return integrate_semi_infinite(integrand, spec)


"""------------Point verification------------"""

# closed form and reference scale, then numeric value, per identity
ClosedForm = Callable[[Any], Tuple[float, Optional[float]]]
Numeric = Callable[[Any, QuadratureSpec], IntegralResult]


def _orthogonality_closed(p: OrthogonalityParams) -> Tuple[float, Optional[float]]:
    value = orthogonality_closed_form(p.m_prime, p.n_l, p.n_k)
    if p.n_l == p.n_k:
        return value, None
    # off-diagonal: measure against the geometric mean of the two norms
    scale = math.sqrt(
        ualp_norm_sq(PolyParams(m_prime=p.m_prime, n=p.n_l)) * ualp_norm_sq(PolyParams(m_prime=p.m_prime, n=p.n_k))
    )
    return value, scale


IDENTITIES: Dict[IdentityName, Tuple[Type[BaseModel], ClosedForm, Numeric]] = {
    IdentityName.NORM: (
        PolyParams,
        lambda p: (ualp_norm_sq(p), None),
        norm_numeric,
    ),
    IdentityName.WEIGHTED_NORM: (
        PolyParams,
        lambda p: (ualp_weighted_norm_sq(p), None),
        weighted_norm_numeric,
    ),
    IdentityName.ORTHOGONALITY: (
        OrthogonalityParams,
        _orthogonality_closed,
        orthogonality_numeric,
    ),
    IdentityName.MAIN_INTEGRAL: (
        MainIntegralParams,
        lambda p: (main_integral_closed_form(p), None),
        main_integral_numeric,
    ),
    IdentityName.BESSEL_INTEGRAL: (
        BesselIntegralParams,
        lambda p: (bessel_integral_closed_form(p), None),
        bessel_integral_numeric,
    ),
    IdentityName.POWER_EXP: (
        PowerExpParams,
        lambda p: (power_exp_closed_form(p.m, p.n, p.beta), None),
        lambda p, spec: power_exp_numeric(p.m, p.n, p.beta, spec),
    ),
    IdentityName.GAUSSIAN_GENERATING: (
        GaussianGeneratingParams,
        lambda p: (gaussian_generating_closed_form(p.m, p.alpha, p.z, p.t), None),
        lambda p, spec: gaussian_generating_numeric(p.m, p.alpha, p.z, p.t, spec),
    ),
}


def identity_from_name(name: Union[str, IdentityName]) -> IdentityName:
    try:
        return IdentityName(name)
    except ValueError:
        known = ", ".join(identity.value for identity in IdentityName)
        raise UnknownIdentityError(f"unknown identity {name!r}; expected one of: {known}") from None


def parse_grid_entry(identity: Union[str, IdentityName], entry: Mapping[str, Any]) -> IdentityParams:
    """Validate one grid entry into the parameter model of `identity`."""
    identity = identity_from_name(identity)
    model, _, _ = IDENTITIES[identity]
    if isinstance(entry, model):
        return entry
    if not isinstance(entry, Mapping):
        raise GridEntryError(f"{identity.value} grid entry must be an object, got {type(entry).__name__}")
    try:
        return model.model_validate(dict(entry))
    except ValidationError as error:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in issue['loc']) or 'entry'}: {issue['msg']}" for issue in error.errors()
        )
        raise GridEntryError(f"malformed {identity.value} grid entry {dict(entry)!r}: {problems}") from None


def verify_point(identity: Union[str, IdentityName], entry: Union[Mapping[str, Any], IdentityParams],
                 spec: Optional[QuadratureSpec], abs_tol: float, rel_tol: float) -> VerificationRecord:
    """Compare one closed form with its quadrature."""
    identity = identity_from_name(identity)
    params = parse_grid_entry(identity, entry)
    _, closed_form_of, numeric_of = IDENTITIES[identity]
    parameters = params.model_dump()
    closed_form = None
    try:
        closed_form, scale = closed_form_of(params)
        numeric = numeric_of(params, spec or QuadratureSpec())
    except (UALPError, ValidationError, ArithmeticError) as error:
        return VerificationRecord.failure(identity, parameters, error, closed_form=closed_form)
    return VerificationRecord.compare(identity, parameters, closed_form, numeric, abs_tol, rel_tol, scale=scale)
