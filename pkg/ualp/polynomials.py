# ualp/polynomials.py
"""Universal associated Legendre polynomials P_{l'}^{m'}(x) with l' = m' + n.

Three independent routes evaluate the same family:
  * the finite series (`ualp_eval`), formed in log space and resummed in
    mpmath wherever its alternating terms cancel beyond double precision;
  * the Gegenbauer recurrence (`ualp_eval_gegenbauer`), C_n^{m'+1/2};
  * coefficient extraction from the generating function (`ualp_coefficients`).
No Condon-Shortley phase is used anywhere.
"""
import math
from functools import lru_cache
from typing import Tuple

import mpmath
import numpy as np

from .errors import ArgumentExcursionError, DomainError, RangeError
from .series import power_series_power
from .special import ArrayLike, as_output, exp_checked, gegenbauer_c, log_gamma
from .ualp_types import PolyParams

_LN2 = math.log(2.0)

# Composed arguments may leave [-1, 1] by this much through rounding alone.
EXCURSION_TOLERANCE = 1e-12

# Relative rounding bound above which a double-precision series sum is redone in mpmath.
_FLOAT_SUM_TOLERANCE = 1e-12
_EPS = np.finfo(float).eps
_GUARD_DIGITS = 20
_MAX_DIGITS = 4000


def _domain_points(x: ArrayLike) -> np.ndarray:
    points = np.asarray(x, dtype=float)
    bad = np.isnan(points) | (np.abs(points) > 1.0)
    if np.any(bad):
        offending = points[bad].flat[0] if points.ndim else float(points)
        raise DomainError(f"x={offending!r} lies outside the domain [-1, 1]")
    return points


def _pole_distance(points: np.ndarray) -> np.ndarray:
    """sqrt(1 - x^2), formed as sqrt((1 - x)(1 + x)) to keep precision near +-1."""
    return np.sqrt((1.0 - points) * (1.0 + points))


def _log_generating_prefactor(m_prime: float) -> float:
    """ln[Gamma(2m'+1) / (2^{m'} Gamma(m'+1))]."""
    return log_gamma(2.0 * m_prime + 1.0) - m_prime * _LN2 - log_gamma(m_prime + 1.0)


def _series_terms(params: PolyParams, printed_denominator: bool):
    """Powers of x, log-magnitudes and signs of the series coefficients."""
    n = params.n
    l_prime = params.l_prime
    nus = np.arange(n // 2 + 1)
    log_magnitudes = np.array([
        log_gamma(2.0 * l_prime - 2.0 * nu + 1.0)
        - (nu if printed_denominator else l_prime) * _LN2
        - log_gamma(nu + 1.0)
        - log_gamma(n - 2.0 * nu + 1.0)
        - log_gamma(l_prime - nu + 1.0)
        for nu in nus
    ])
    signs = np.where(nus % 2 == 0, 1.0, -1.0)
    return n - 2 * nus, log_magnitudes, signs


def _working_digits(wanted: float) -> int:
    # rounded up to a multiple of ten so the coefficient cache is shared between points
    return min(_MAX_DIGITS, 10 * int(math.ceil(wanted / 10.0)))


@lru_cache(maxsize=256)
def _exact_coefficients(m_prime: float, n: int, printed_denominator: bool, digits: int) -> Tuple[mpmath.mpf, ...]:
    """Signed series coefficients carried to `digits` significant digits."""
    with mpmath.workdps(digits):
        l_prime = mpmath.mpf(m_prime) + n
        coefficients = []
        for nu in range(n // 2 + 1):
            denominator = (
                mpmath.power(2, nu if printed_denominator else l_prime)
                * mpmath.factorial(nu)
                * mpmath.factorial(n - 2 * nu)
                * mpmath.gamma(l_prime - nu + 1)
            )
            coefficient = mpmath.gamma(2 * l_prime - 2 * nu + 1) / denominator
            coefficients.append(-coefficient if nu % 2 else coefficient)
        return tuple(coefficients)


def _resum_point(params: PolyParams, c: float, s: float, printed_denominator: bool, lost_digits: float) -> float:
    """One point of the series summed with enough digits to absorb its cancellation."""
    powers = range(params.n, -1, -2)
    digits = _working_digits(_GUARD_DIGITS + max(0.0, lost_digits))
    while True:
        with mpmath.workdps(digits):
            point = mpmath.mpf(c)
            coefficients = _exact_coefficients(params.m_prime, params.n, printed_denominator, digits)
            terms = [coefficient * point ** power for coefficient, power in zip(coefficients, powers)]
            total = mpmath.fsum(terms)
            largest = max(abs(term) for term in terms)
            if total == 0 or largest == 0:
                return 0.0
            lost = float(mpmath.log10(largest / abs(total)))
            if lost + _GUARD_DIGITS <= digits or digits >= _MAX_DIGITS:
                if params.m_prime > 0:
                    total *= mpmath.mpf(s) ** mpmath.mpf(params.m_prime)
                value = float(total)
                break
        digits = _working_digits(lost + 2 * _GUARD_DIGITS)
    if math.isinf(value):
        raise RangeError(f"P_{params.l_prime}^{params.m_prime}({c!r}) overflows a double")
    return value


def _evaluate_series(params: PolyParams, cos_part: np.ndarray, sin_part: np.ndarray,
                     printed_denominator: bool = False) -> np.ndarray:
    """sin_part^{m'} * series(cos_part).

    The alternating terms grow like Gamma(2l'+1) while their sum can be many
    orders of magnitude smaller. The double-precision sum is kept only where
    its rounding bound stays below _FLOAT_SUM_TOLERANCE of the result; every
    other point is summed again in mpmath with the digits the cancellation eats.
    """
    shape = np.shape(cos_part)
    c = np.ravel(cos_part)
    s = np.ravel(sin_part)
    powers, log_magnitudes, signs = _series_terms(params, printed_denominator)
    p = powers[:, None]

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        log_abs_c = np.log(np.abs(c))[None, :]
        log_terms = log_magnitudes[:, None] + np.where(p == 0, 0.0, p * log_abs_c)
        if params.m_prime > 0:
            log_terms = log_terms + params.m_prime * np.log(s)[None, :]
        term_signs = signs[:, None] * np.where(p % 2 == 1, np.sign(c)[None, :], 1.0)
        terms = term_signs * np.exp(log_terms)
        totals = np.sum(terms, axis=0)
        magnitudes = np.sum(np.abs(terms), axis=0)
        # each term carries the rounding of exp() at its log-magnitude plus one per addition
        worst_log = np.max(np.where(np.isfinite(log_terms), np.abs(log_terms), 0.0), axis=0)
        rounding = _EPS * (powers.size + worst_log + 1.0) * magnitudes
        accurate = np.isfinite(totals) & np.isfinite(magnitudes) & (rounding <= _FLOAT_SUM_TOLERANCE * np.abs(totals))

    values = np.where(accurate, totals, 0.0)
    for index in np.flatnonzero(~accurate):
        if np.isfinite(magnitudes[index]) and np.isfinite(totals[index]) and totals[index] != 0.0:
            lost_digits = math.log10(magnitudes[index] / abs(totals[index]))
        else:
            lost_digits = float(np.max(log_terms[:, index])) / math.log(10.0)
        values[index] = _resum_point(params, float(c[index]), float(s[index]), printed_denominator, lost_digits)
    return values.reshape(shape)


def ualp_eval(params: PolyParams, x: ArrayLike) -> ArrayLike:
    """P_{l'}^{m'}(x) from the finite series with the 2^{l'} denominator."""
    points = _domain_points(x)
    return as_output(x, _evaluate_series(params, points, _pole_distance(points)))


def ualp_eval_printed_series(params: PolyParams, x: ArrayLike) -> ArrayLike:
    """The series with the 2^nu denominator exactly as it is usually printed.

    Kept only to show that this reading disagrees with the generating function.
    """
    points = _domain_points(x)
    return as_output(x, _evaluate_series(params, points, _pole_distance(points), printed_denominator=True))


def ualp_eval_polar(params: PolyParams, theta: ArrayLike) -> ArrayLike:
    """P_{l'}^{m'}(cos theta) for theta in [0, pi], with sin theta taken directly."""
    angles = np.asarray(theta, dtype=float)
    if np.any(np.isnan(angles)) or np.any(angles < 0.0) or np.any(angles > math.pi):
        raise DomainError("theta must lie in [0, pi]")
    return as_output(theta, _evaluate_series(params, np.cos(angles), np.abs(np.sin(angles))))


def ualp_eval_gegenbauer(params: PolyParams, x: ArrayLike) -> ArrayLike:
    """Gamma(2m'+1)/(2^{m'} Gamma(m'+1)) (1-x^2)^{m'/2} C_n^{m'+1/2}(x)."""
    points = _domain_points(x)
    prefactor = exp_checked(_log_generating_prefactor(params.m_prime), "prefactor")
    values = prefactor * _pole_distance(points) ** params.m_prime * gegenbauer_c(
        params.n, params.m_prime + 0.5, points
    )
    return as_output(x, np.asarray(values, dtype=float))


def ualp_generating_fn_by_offset(m_prime: float, x: ArrayLike, v: float) -> ArrayLike:
    """sum_n P_{m'+n}^{m'}(x) v^n in closed form."""
    params = PolyParams(m_prime=m_prime, n=0)
    if not abs(v) < 1.0:
        raise DomainError(f"the generating function needs |v| < 1, got v={v!r}")
    points = _domain_points(x)
    prefactor = exp_checked(_log_generating_prefactor(params.m_prime), "prefactor")
    kernel = (1.0 - 2.0 * points * v + v * v) ** (-params.m_prime - 0.5)
    return as_output(x, prefactor * _pole_distance(points) ** params.m_prime * kernel)


def ualp_generating_fn(m_prime: float, x: ArrayLike, v: float) -> ArrayLike:
    """sum_{l'} P_{l'}^{m'}(x) v^{l'} in closed form.

    For v < 0 the factor v^{m'} is real only for integer m'.
    """
    if v < 0 and float(m_prime) != math.floor(m_prime):
        raise DomainError(f"v={v!r} < 0 needs an integer order, got m'={m_prime!r}")
    by_offset = ualp_generating_fn_by_offset(m_prime, x, v)
    return by_offset * v ** m_prime


def ualp_coefficients(m_prime: float, x: float, n_max: int) -> np.ndarray:
    """P_{m'+n}^{m'}(x) for n = 0..n_max read off the generating function's power series."""
    params = PolyParams(m_prime=m_prime, n=n_max)
    point = float(_domain_points(x))
    kernel = power_series_power([1.0, -2.0 * point, 1.0], -params.m_prime - 0.5, n_max)
    prefactor = exp_checked(_log_generating_prefactor(params.m_prime), "prefactor")
    return prefactor * math.sqrt((1.0 - point) * (1.0 + point)) ** params.m_prime * kernel


def ualp_norm_sq(params: PolyParams) -> float:
    """integral of P^2 over [-1, 1] = 2 Gamma(l'+m'+1) / ((2l'+1) n!)."""
    l_prime = params.l_prime
    return 2.0 / (2.0 * l_prime + 1.0) * exp_checked(
        log_gamma(l_prime + params.m_prime + 1.0) - log_gamma(params.n + 1.0), "norm"
    )


def ualp_weighted_norm_sq(params: PolyParams) -> float:
    """integral of P^2 / (1 - x^2) over [-1, 1] = Gamma(l'+m'+1) / (m' n!)."""
    if params.m_prime <= 0:
        raise DomainError("the weighted norm diverges for m' = 0")
    log_value = log_gamma(params.l_prime + params.m_prime + 1.0) - log_gamma(params.n + 1.0)
    return exp_checked(log_value, "weighted norm") / params.m_prime


def ualp_shifted_integrand(params_l: PolyParams, x: ArrayLike, t: float) -> ArrayLike:
    """P_{l'}^{m'}((xt - 1)/sqrt(D)) * D^{-(l'+1)/2} with D = 1 + t^2 - 2tx."""
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t!r}")
    points = _domain_points(x)
    # 1 + t^2 - 2tx, written so it stays positive and exact near x = 1
    shift = (1.0 - t) ** 2 + 2.0 * t * (1.0 - points)
    root = np.sqrt(shift)
    argument = (points * t - 1.0) / root

    excursion = np.abs(argument) - 1.0
    if np.any(excursion > EXCURSION_TOLERANCE):
        raise ArgumentExcursionError(
            f"composed argument left [-1, 1] by {float(np.max(excursion))!r} at t={t!r}"
        )
    argument = np.clip(argument, -1.0, 1.0)
    # sqrt(1 - argument^2) = t sqrt(1 - x^2) / sqrt(D) exactly
    argument_sin = t * _pole_distance(points) / root

    values = _evaluate_series(params_l, argument, argument_sin) * shift ** (-(params_l.l_prime + 1.0) / 2.0)
    return as_output(x, values)
