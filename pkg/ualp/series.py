# ualp/series.py
"""Truncated power series used to read coefficients off generating functions."""
from typing import Sequence

import numpy as np

from .errors import DomainError


def power_series_power(coefficients: Sequence[float], exponent: float, order: int) -> np.ndarray:
    """First `order + 1` coefficients of f(v)**exponent.

    `coefficients` are those of f(v) = a_0 + a_1 v + ...; a_0 must be positive
    so that a real power exists. Uses the J.C.P. Miller recurrence
        g_k = 1/(k a_0) * sum_{j=1..k} ((exponent + 1) j - k) a_j g_{k-j}.
    """
    a = np.asarray(coefficients, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise DomainError("coefficients must be a non-empty sequence")
    if not a[0] > 0:
        raise DomainError(f"leading coefficient must be positive, got {a[0]!r}")
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order!r}")

    a = np.concatenate([a, np.zeros(max(0, order + 1 - a.size))])[: order + 1]
    g = np.zeros(order + 1)
    g[0] = a[0] ** exponent
    for k in range(1, order + 1):
        j = np.arange(1, k + 1)
        g[k] = np.sum(((exponent + 1.0) * j - k) * a[j] * g[k - j]) / (k * a[0])
    return g


def binomial_series(exponent: float, order: int) -> np.ndarray:
    """Coefficients of (1 + u)**exponent up to u**order."""
    return power_series_power([1.0, 1.0], exponent, order)
