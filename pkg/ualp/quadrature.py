# ualp/quadrature.py
"""Numerical integration engines.

`integrate_finite` is double-exponential (tanh-sinh) quadrature: the trapezoid
rule in t after x = mid + half*tanh(pi/2 sinh t), halving the step per level.
Each node's distance to its nearer endpoint is formed without cancellation.

Integrands must accept a numpy array of abscissae. An integrand that is
singular at an endpoint other than 0 cannot recover that distance from the
rounded x; pass `endpoint_offsets=True` and it is called as
f(x, x - a, b - x) with both offsets exact to full relative precision. In the
plain form the error those rounded abscissae can cause is added to the
error estimate, and the result only counts as converged if it still meets
the tolerance.
"""
import math
from typing import Callable, Iterable, List, Optional

import numpy as np

from .errors import DomainError, IntegrandEvaluationError
from .ualp_types import IntegralResult, QuadratureSpec
from .util import debug_print

Integrand = Callable[..., np.ndarray]

# Truncation of the t-axis; the weights there are ~1e-270 of the central ones.
_T_MAX = 6.0
_MIN_LEVEL = 3

# Trailing partial sums handed to the iterated Aitken transform.
_AITKEN_WINDOW = 9
_SEGMENT_TOL_FACTOR = 1e-2


def _evaluate(f: Integrand, nodes: np.ndarray, *offsets: np.ndarray) -> np.ndarray:
    values = np.broadcast_to(np.asarray(f(nodes, *offsets), dtype=float), nodes.shape)
    bad = ~np.isfinite(values)
    if np.any(bad):
        where = nodes[bad][0]
        kind = "NaN" if np.isnan(values[bad][0]) else "an infinite value"
        raise IntegrandEvaluationError(f"integrand returned {kind} at x={where!r}")
    return values


class _Nodes:
    """Abscissae, exact endpoint offsets and trapezoid weights (before the step h)."""

    def __init__(self, t: np.ndarray, a: float, b: float, endpoint_offsets: bool):
        half = 0.5 * (b - a)
        s = 0.5 * math.pi * np.sinh(t)
        decay = np.exp(-2.0 * np.abs(s))
        gap = 2.0 * decay / (1.0 + decay)  # 1 - tanh|s|, no cancellation
        near = half * gap
        weights = half * 0.5 * math.pi * np.cosh(t) * gap * (2.0 - gap)
        upper = t >= 0
        x = np.where(upper, b - near, a + near)
        if endpoint_offsets:
            keep = (near > 0) & (weights > 0)
            x = np.clip(x, a, b)
        else:
            keep = (x > a) & (x < b) & (weights > 0)
        self.x = x[keep]
        self.near = near[keep]
        self.upper = upper[keep]
        self.weights = weights[keep]
        self.from_a = np.where(self.upper, (b - a) - self.near, self.near)
        self.from_b = np.where(self.upper, self.near, (b - a) - self.near)
        if endpoint_offsets:
            self.distance_error = np.zeros_like(self.x)
        else:
            # relative error of the offset the integrand actually sees
            seen = np.where(self.upper, b - self.x, self.x - a)
            self.distance_error = np.minimum(1.0, np.abs(seen - self.near) / self.near)


class _Level:
    """Running tanh-sinh sums over every level evaluated so far."""

    def __init__(self):
        self.total = 0.0
        self.resolution = 0.0
        self.evaluations = 0
        # per side: offset of the innermost node and |f| there
        self.edges = {False: (math.inf, 0.0), True: (math.inf, 0.0)}

    def add(self, f: Integrand, t: np.ndarray, a: float, b: float, endpoint_offsets: bool) -> None:
        nodes = _Nodes(t, a, b, endpoint_offsets)
        if nodes.x.size == 0:
            return
        if endpoint_offsets:
            values = _evaluate(f, nodes.x, nodes.from_a, nodes.from_b)
        else:
            values = _evaluate(f, nodes.x)
        contributions = nodes.weights * values
        self.total += float(np.sum(contributions))
        self.resolution += float(np.sum(np.abs(contributions) * nodes.distance_error))
        self.evaluations += int(nodes.x.size)
        for side in (False, True):
            on_side = np.flatnonzero(nodes.upper == side)
            if on_side.size == 0:
                continue
            innermost = on_side[np.argmin(nodes.near[on_side])]
            if nodes.near[innermost] < self.edges[side][0]:
                self.edges[side] = (float(nodes.near[innermost]), float(abs(values[innermost])))

    def unsampled_mass(self) -> float:
        """|f| times offset at the innermost node of each side, standing in for the dropped tail."""
        return sum(offset * magnitude for offset, magnitude in self.edges.values() if math.isfinite(offset))


def integrate_finite(f: Integrand, a: float, b: float, spec: Optional[QuadratureSpec] = None,
                     debug: bool = False, endpoint_offsets: bool = False) -> IntegralResult:
    """Integrate f over [a, b], doubling the node density until two levels agree.

    The error estimate is the change between the last two levels plus the
    part of the sum resting on abscissae that rounding moved toward an
    endpoint and the tail between each endpoint and its innermost node.
    """
    spec = spec or QuadratureSpec()
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"integrate_finite needs finite a < b, got [{a!r}, {b!r}]")

    h = 1.0
    sums = _Level()
    sums.add(f, np.arange(-_T_MAX, _T_MAX + 0.5 * h, h), a, b, endpoint_offsets)
    estimate = h * sums.total
    error = math.inf
    converged = False

    for level in range(1, spec.max_levels + 1):
        h *= 0.5
        sums.add(f, np.arange(-_T_MAX + h, _T_MAX, 2.0 * h), a, b, endpoint_offsets)
        refined = h * sums.total
        error = abs(refined - estimate) + h * sums.resolution + sums.unsampled_mass()
        estimate = refined
        if level >= _MIN_LEVEL and error <= spec.tolerance_for(estimate):
            converged = True
            break

    debug_print(debug, f"tanh-sinh [{a:g}, {b:g}] level={level} value={estimate!r} error={error:.3g}")
    return IntegralResult(value=estimate, error_estimate=error, converged=converged, evaluations=sums.evaluations)


def integrate_semi_infinite(f: Integrand, spec: Optional[QuadratureSpec] = None,
                            debug: bool = False) -> IntegralResult:
    """Integrate f over [0, inf) through x = u / (1 - u) on [0, 1)."""
    def mapped(u: np.ndarray) -> np.ndarray:
        complement = 1.0 - u
        values = np.asarray(f(u / complement), dtype=float)
        # the Jacobian overflows before a decaying integrand reaches zero
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            return np.where(values == 0.0, 0.0, values / (complement * complement))

    return integrate_finite(mapped, 0.0, 1.0, spec, debug=debug)


def _iterated_aitken(partial_sums: List[float]) -> float:
    """Repeated Aitken delta-squared over the trailing window of partial sums."""
    row = partial_sums[-_AITKEN_WINDOW:]
    while len(row) >= 3:
        accelerated = []
        for s0, s1, s2 in zip(row, row[1:], row[2:]):
            denominator = s2 - 2.0 * s1 + s0
            if denominator == 0.0:
                accelerated.append(s2)
                continue
            candidate = s2 - (s2 - s1) ** 2 / denominator
            accelerated.append(candidate if math.isfinite(candidate) else s2)
        row = accelerated
    return row[-1]


def integrate_oscillatory_semi_infinite(f: Integrand, segment_boundaries: Iterable[float],
                                        spec: Optional[QuadratureSpec] = None,
                                        debug: bool = False) -> IntegralResult:
    """Integrate f over [0, inf) segment by segment, accelerating the partial sums.

    `segment_boundaries` starts at 0 and should bracket the sign changes of f;
    it is consumed lazily, so a generator of zeros works. Stops when two
    successive accelerated values agree within tolerance or the segment cap
    is reached.
    """
    spec = spec or QuadratureSpec()
    segment_spec = spec.model_copy(update={"abs_tol": spec.abs_tol * _SEGMENT_TOL_FACTOR})
    boundaries = iter(segment_boundaries)
    try:
        left = float(next(boundaries))
    except StopIteration:
        raise DomainError("segment_boundaries is empty") from None
    if left != 0.0:
        raise DomainError(f"segment_boundaries must start at 0, got {left!r}")

    partial_sums: List[float] = []
    running = 0.0
    evaluations = 0
    accelerated = math.nan
    error = math.inf
    converged = False
    agreements = 0

    for right in boundaries:
        right = float(right)
        if not right > left:
            raise DomainError(f"segment boundaries must increase strictly: {left!r} then {right!r}")
        segment = integrate_finite(f, left, right, segment_spec)
        evaluations += segment.evaluations
        running += segment.value
        partial_sums.append(running)
        left = right

        if len(partial_sums) >= _AITKEN_WINDOW:
            previous = accelerated
            accelerated = _iterated_aitken(partial_sums)
            if math.isfinite(previous):
                error = abs(accelerated - previous)
                agreements = agreements + 1 if error <= spec.tolerance_for(accelerated) else 0
                if agreements >= 2:
                    converged = True
                    break
        if len(partial_sums) >= spec.max_segments:
            break

    if not partial_sums:
        raise DomainError("segment_boundaries needs at least two points")
    value = accelerated if math.isfinite(accelerated) else running
    debug_print(debug, f"oscillatory segments={len(partial_sums)} value={value!r} error={error:.3g}")
    return IntegralResult(value=value, error_estimate=error, converged=converged, evaluations=evaluations)
