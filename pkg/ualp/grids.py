# ualp/grids.py
"""Compiled-in parameter grids for `verify --grid NAME`."""
from itertools import product
from typing import Any, Dict, List

from .errors import GridEntryError
from .identities import identity_from_name
from .ualp_types import IdentityName

DEFAULT_GRID = "default"
DIVERGENT_GRID = "includes-divergent-point"

GridEntry = Dict[str, Any]

_NORM_GRID: List[GridEntry] = [
    {"m_prime": m_prime, "n": n} for m_prime, n in product((0.5, 1.0, 2.3), range(6))
]

_ORTHOGONALITY_GRID: List[GridEntry] = [
    {"m_prime": m_prime, "n_l": n_l, "n_k": n_k}
    for m_prime, n_l, n_k in product((0.0, 1.5, 3.2), range(6), range(6))
]

_MAIN_INTEGRAL_GRID: List[GridEntry] = [
    {"m_prime": m_prime, "n_l": n_l, "n_k": n_k, "t": t}
    for m_prime, n_l, n_k, t in product((0.0, 0.5, 1.0, 2.3), (0, 1, 2, 4), (0, 1, 3), (0.1, 0.5, 0.9))
]

_BESSEL_GRID: List[GridEntry] = [
    {"n": 1, "m": 0.0, "alpha": 1.0, "z": 1.0},
    {"n": 2, "m": 0.0, "alpha": 1.0, "z": 2.0},
    {"n": 4, "m": 0.5, "alpha": 1.5, "z": 0.7},
    {"n": 3, "m": 0.0, "alpha": 2.0, "z": 1.0},
]

_POWER_EXP_GRID: List[GridEntry] = [
    {"m": 1.0, "n": 2.0, "beta": 1.0},
    {"m": 0.0, "n": 1.0, "beta": 3.0},
    {"m": 2.5, "n": 2.0, "beta": 0.8},
    {"m": 3.0, "n": 2.0, "beta": 0.5},
    {"m": 6.0, "n": 2.0, "beta": 2.0},
]

_GAUSSIAN_GENERATING_GRID: List[GridEntry] = [
    {"m": 0.0, "alpha": 1.0, "z": 1.0, "t": 1.0},
    {"m": 0.5, "alpha": 2.0, "z": 0.5, "t": 1.5},
    {"m": 1.3, "alpha": 1.0, "z": 2.0, "t": 0.7},
    {"m": 3.0, "alpha": 0.5, "z": 1.0, "t": 2.0},
]

PRESETS: Dict[IdentityName, Dict[str, List[GridEntry]]] = {
    IdentityName.NORM: {DEFAULT_GRID: _NORM_GRID},
    IdentityName.WEIGHTED_NORM: {DEFAULT_GRID: _NORM_GRID},
    IdentityName.ORTHOGONALITY: {DEFAULT_GRID: _ORTHOGONALITY_GRID},
    IdentityName.MAIN_INTEGRAL: {DEFAULT_GRID: _MAIN_INTEGRAL_GRID},
    IdentityName.BESSEL_INTEGRAL: {
        DEFAULT_GRID: _BESSEL_GRID,
        # m=1 violates n > 2m + 1/2 and must come back as a failed record
        DIVERGENT_GRID: _BESSEL_GRID + [{"n": 1, "m": 1.0, "alpha": 1.0, "z": 1.0}],
    },
    IdentityName.POWER_EXP: {DEFAULT_GRID: _POWER_EXP_GRID},
    IdentityName.GAUSSIAN_GENERATING: {DEFAULT_GRID: _GAUSSIAN_GENERATING_GRID},
}


def preset_grid(identity: Any, name: str = DEFAULT_GRID) -> List[GridEntry]:
    """A fresh copy of the named preset grid of `identity`."""
    identity = identity_from_name(identity)
    presets = PRESETS[identity]
    if name not in presets:
        raise GridEntryError(
            f"no grid preset {name!r} for {identity.value}; available: {', '.join(sorted(presets))}"
        )
    return [dict(entry) for entry in presets[name]]
