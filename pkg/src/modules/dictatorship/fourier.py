"""Efron-Stein decomposition under the uniform product measure on [R]^L.

Components are stored compressed: f_S keeps size-R axes for S and size-1 axes
elsewhere, so they broadcast against the full table.
"""

from itertools import combinations

import numpy as np

from src.config import settings
from src.core.exceptions import ParameterError, SizeLimitError
from src.modules.dictatorship.testing import TestFunction

Decomposition = dict[frozenset[int], np.ndarray]


def _subsets(L: int):
    for size in range(L + 1):
        for combo in combinations(range(L), size):
            yield frozenset(combo)


def efron_stein(f: np.ndarray, cap: int | None = None) -> Decomposition:
    """All 2^L components via inclusion-exclusion of conditional expectations.

    f_S = Σ_{T ⊆ S} (-1)^{|S \\ T|} E[f | x_T].
    """
    cap = settings.EFRON_STEIN_CAP if cap is None else cap
    f = np.asarray(f, dtype=np.float64)
    if f.size > cap:
        raise SizeLimitError("Efron-Stein table", cap, f.size)
    L = f.ndim

    conditional: dict[frozenset[int], np.ndarray] = {}
    for subset in _subsets(L):
        rest = tuple(axis for axis in range(L) if axis not in subset)
        conditional[subset] = f.mean(axis=rest, keepdims=True) if rest else f

    components: Decomposition = {}
    for subset in _subsets(L):
        shape = tuple(f.shape[axis] if axis in subset else 1 for axis in range(L))
        total = np.zeros(shape)
        for size in range(len(subset) + 1):
            sign = -1.0 if (len(subset) - size) % 2 else 1.0
            for inner in combinations(sorted(subset), size):
                total = total + sign * conditional[frozenset(inner)]
        components[subset] = total
    return components


def reconstruct(components: Decomposition, shape: tuple[int, ...]) -> np.ndarray:
    result = np.zeros(shape)
    for part in components.values():
        result = result + part
    return result


def squared_norm(part: np.ndarray) -> float:
    """‖f_S‖₂² under the uniform measure (broadcast axes do not change the mean)."""
    return float(np.mean(part**2))


def influence(
    f: np.ndarray,
    coordinate: int,
    degree_cap: int | None = None,
    components: Decomposition | None = None,
) -> float:
    """Σ ‖f_S‖₂² over S ∋ coordinate (and |S| <= degree_cap). Coordinates are 0-based."""
    f = np.asarray(f, dtype=np.float64)
    if not 0 <= coordinate < f.ndim:
        raise ParameterError(f"Coordinate {coordinate} outside [0, {f.ndim})", parameter="coordinate")
    components = efron_stein(f) if components is None else components
    return sum(
        squared_norm(part)
        for subset, part in components.items()
        if coordinate in subset and (degree_cap is None or len(subset) <= degree_cap)
    )


def max_low_degree_influence(F: TestFunction, degree_cap: int) -> tuple[float, int, int]:
    """max over labels i and coordinates j of Inf_j^{<=d}(F_i), with its (i, j)."""
    best = (0.0, 0, 0)
    for label in range(F.R):
        indicator = F.indicator(label)
        components = efron_stein(indicator)
        for coordinate in range(F.L):
            value = influence(indicator, coordinate, degree_cap, components)
            if value > best[0]:
                best = (value, label, coordinate)
    return best
