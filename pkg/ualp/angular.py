# ualp/angular.py
"""The polar equation of a ring-shaped potential and its polynomial solutions.

With m' = sqrt(b + m^2) and lambda = l'(l'+1), H(theta) = P_{l'}^{m'}(cos theta)
solves
    (1/sin) d/dtheta (sin dH/dtheta) + (lambda - m'^2 / sin^2) H = 0.
The residual checks use finite differences so they stay independent of the
series being checked.
"""
import math
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .polynomials import ualp_eval
from .ualp_types import PolyParams, RingPotentialParams

# Grid points closer than this to a pole are refused.
POLE_MARGIN_THETA = 0.05
POLE_MARGIN_X = 0.01

_STEP = 1e-4


def effective_order(p: RingPotentialParams) -> float:
    """m' = sqrt(b + m^2)."""
    radicand = p.b + p.m * p.m
    if radicand < 0:
        raise DomainError(f"b={p.b!r} must satisfy b >= -m^2 = {-p.m * p.m}")
    return math.sqrt(radicand)


def angular_eigenvalue(m_prime: float, n: int) -> float:
    """lambda = l'(l'+1) with l' = m' + n."""
    l_prime = PolyParams(m_prime=m_prime, n=n).l_prime
    return l_prime * (l_prime + 1.0)


def polar_solution_params(p: RingPotentialParams, n: int) -> PolyParams:
    return PolyParams(m_prime=effective_order(p), n=n)


def _grid(points: Sequence[float], low: float, high: float, name: str) -> np.ndarray:
    grid = np.asarray(points, dtype=float).ravel()
    if grid.size == 0:
        raise DomainError(f"{name} grid is empty")
    bad = np.isnan(grid) | (grid < low) | (grid > high)
    if np.any(bad):
        raise DomainError(f"{name}={grid[bad][0]!r} lies outside [{low!r}, {high!r}]")
    return grid


def _derivatives(f: Callable[[np.ndarray], np.ndarray], points: np.ndarray):
    """First and second central differences, one Richardson level each."""
    def central(h: float):
        ahead = f(points + h)
        behind = f(points - h)
        here = f(points)
        return (ahead - behind) / (2.0 * h), (ahead - 2.0 * here + behind) / (h * h)

    first_h, second_h = central(_STEP)
    first_2h, second_2h = central(2.0 * _STEP)
    return (4.0 * first_h - first_2h) / 3.0, (4.0 * second_h - second_2h) / 3.0


def _normalized(residual: np.ndarray, values: np.ndarray, eigenvalue: float) -> float:
    peak = float(np.max(np.abs(values)))
    return float(np.max(np.abs(residual))) / max(1.0, peak, eigenvalue * peak)


def ode_residual(params: PolyParams, theta_grid: Sequence[float]) -> float:
    """Largest normalized residual of the polar equation over `theta_grid`."""
    theta = _grid(theta_grid, POLE_MARGIN_THETA, math.pi - POLE_MARGIN_THETA, "theta")
    eigenvalue = angular_eigenvalue(params.m_prime, params.n)

    def solution(angles: np.ndarray) -> np.ndarray:
        return np.asarray(ualp_eval(params, np.cos(angles)), dtype=float)

    values = solution(theta)
    first, second = _derivatives(solution, theta)
    sin_theta = np.sin(theta)
    residual = (
        second
        + np.cos(theta) / sin_theta * first
        + (eigenvalue - params.m_prime ** 2 / sin_theta ** 2) * values
    )
    return _normalized(residual, values, eigenvalue)


def ode_residual_x(params: PolyParams, x_grid: Sequence[float]) -> float:
    """Same check for (1-x^2) y'' - 2x y' + (lambda - m'^2/(1-x^2)) y = 0."""
    x = _grid(x_grid, -1.0 + POLE_MARGIN_X, 1.0 - POLE_MARGIN_X, "x")
    eigenvalue = angular_eigenvalue(params.m_prime, params.n)

    def solution(points: np.ndarray) -> np.ndarray:
        return np.asarray(ualp_eval(params, points), dtype=float)

    values = solution(x)
    first, second = _derivatives(solution, x)
    one_minus_sq = (1.0 - x) * (1.0 + x)
    residual = one_minus_sq * second - 2.0 * x * first + (eigenvalue - params.m_prime ** 2 / one_minus_sq) * values
    return _normalized(residual, values, eigenvalue)
