# ualp/special.py
"""Scalar special functions shared by the polynomial, quadrature and identity modules.

Log-gamma comes from scipy.special; the Bessel function of the first kind is
summed from its ascending series; Gegenbauer polynomials use the three-term
recurrence. Everything here is a pure function of its arguments.
"""
import math
import sys
from typing import Union

import mpmath
import numpy as np
from scipy import special as sp

from .errors import DomainError, RangeError

ArrayLike = Union[float, np.ndarray]

# Largest Bessel argument the ascending series is used for.
BESSEL_X_MAX = 100.0

# A series term smaller than this fraction of the running sum ends the summation.
_SERIES_CUTOFF = 1e-17
_SERIES_MAX_TERMS = 10_000
_BASE_DIGITS = 20

_LOG_DBL_MAX = math.log(sys.float_info.max)


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    x = _check_finite("x", x)
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return float(sp.gammaln(x))


def exp_checked(log_value: float, what: str = "value") -> float:
    """exp(log_value), raising RangeError where the double would overflow."""
    if log_value > _LOG_DBL_MAX:
        raise RangeError(f"{what} overflows a double: ln|{what}| = {log_value:.6g}")
    return math.exp(log_value)


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b) evaluated as exp(ln Gamma(a) - ln Gamma(b))."""
    return exp_checked(log_gamma(a) - log_gamma(b), "gamma ratio")


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for nu >= 0 and 0 <= x <= BESSEL_X_MAX.

    The ascending series alternates with terms as large as ~e^x / x, so it is
    summed with enough extra working digits to absorb that cancellation.
    """
    nu = _check_finite("nu", nu)
    x = _check_finite("x", x)
    if nu < 0:
        raise DomainError(f"bessel_j requires nu >= 0, got {nu!r}")
    if x < 0:
        raise DomainError(f"bessel_j requires x >= 0, got {x!r}")
    if x > BESSEL_X_MAX:
        raise RangeError(f"bessel_j series is only used for x <= {BESSEL_X_MAX}, got {x!r}")
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0

    digits = _BASE_DIGITS + int(math.ceil(x / math.log(10.0)))
    with mpmath.workdps(digits):
        half = mpmath.mpf(x) / 2
        order = mpmath.mpf(nu)
        step = -(half * half)
        term = half ** order / mpmath.gamma(order + 1)
        total = term
        for k in range(1, _SERIES_MAX_TERMS):
            term *= step / (k * (order + k))
            total += term
            if abs(term) < _SERIES_CUTOFF * abs(total):
                break
        return float(total)


def bessel_generating_fn(x: float, t: float) -> float:
    """exp(x (t - 1/t) / 2), the generating function of integer-order J_n."""
    if t == 0:
        raise DomainError("the Bessel generating function is undefined at t = 0")
    return math.exp(0.5 * x * (t - 1.0 / t))


def bessel_generating_partial_sum(x: float, t: float, order_limit: int) -> float:
    """sum_{n=-N}^{N} J_n(x) t^n, using J_{-n} = (-1)^n J_n for the negative orders."""
    if t == 0:
        raise DomainError("the Bessel generating series is undefined at t = 0")
    if order_limit < 0:
        raise DomainError(f"order_limit must be >= 0, got {order_limit!r}")
    total = bessel_j(0, x)
    for n in range(1, order_limit + 1):
        j_n = bessel_j(n, x)
        total += j_n * (t ** n + (-1) ** n * t ** (-n))
    return total


def gegenbauer_c(n: int, lam: float, x: ArrayLike) -> ArrayLike:
    """C_n^lam(x) by the three-term recurrence; vectorized over x."""
    if int(n) != n or n < 0:
        raise DomainError(f"gegenbauer_c requires an integer n >= 0, got {n!r}")
    lam = _check_finite("lam", lam)
    if lam <= 0:
        raise DomainError(f"gegenbauer_c requires lam > 0, got {lam!r}")
    points = np.asarray(x, dtype=float)
    if np.any(np.abs(points) > 1.0) or np.any(np.isnan(points)):
        raise DomainError("gegenbauer_c requires x in [-1, 1]")

    previous = np.ones_like(points)
    current = 2.0 * lam * points
    if n == 0:
        current = previous
    for k in range(2, int(n) + 1):
        previous, current = current, (2.0 * points * (k + lam - 1.0) * current - (k + 2.0 * lam - 2.0) * previous) / k
    return as_output(x, current)


def as_output(template: ArrayLike, values: np.ndarray) -> ArrayLike:
    """Return a Python float for scalar input, the array otherwise."""
    if np.ndim(template) == 0:
        return float(values)
    return values
