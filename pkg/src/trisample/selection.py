"""Discrete triangle-selection distribution: build a CDF table, pick by bisection."""

from dataclasses import dataclass

import numpy as np

from .errors import ZeroMassError
from .mesh import Mesh, max_weights, mean_weights, triangle_areas


@dataclass(frozen=True)
class TriangleTable:
    """Precomputed per-triangle quantities for sampling.

    ``cdf`` is the normalized cumulative mass A_i * <w>_i; it is non-decreasing
    and its final entry is exactly 1. Triangles with zero mass contribute no
    CDF increment and are never selected.
    """

    cdf: np.ndarray
    area: np.ndarray
    mean_weight: np.ndarray
    max_weight: np.ndarray
    total_mass: float


def build_table(mesh: Mesh) -> TriangleTable:
    """Build the selection table for ``mesh``.

    Raises ZeroMassError when every triangle has zero area-weighted mass.
    """
    area = triangle_areas(mesh)
    mean_w = mean_weights(mesh)
    mass = area * mean_w
    total = float(mass.sum())
    if total <= 0.0:
        raise ZeroMassError("mesh has no sampleable mass")
    cdf = np.cumsum(mass) / total
    cdf[-1] = 1.0  # guard against summation drift so xi -> 1 stays in range
    cdf.flags.writeable = False
    return TriangleTable(cdf, area, mean_w, max_weights(mesh), total)


def choose_triangle(table: TriangleTable, xi):
    """Triangle index k with cdf[k-1] <= xi < cdf[k] (cdf[-1] taken as 0).

    Ties resolve upward, so zero-mass triangles (flat CDF segments) are never
    returned. ``xi`` may be a scalar in [0, 1) or an array of such.
    """
    idx = np.searchsorted(table.cdf, xi, side="right")
    if np.ndim(xi) == 0:
        return int(idx)
    return idx
