"""Rejection-sampling baseline for in-triangle sampling.

Trials are uniform points on the triangle accepted with probability
weight/weight_max. Correct for any non-negative field, but the trial count
per sample is unbounded; with barycentric weights the expected count is
weight_max / weight_mean.
"""

import numpy as np

from .errors import IterationCapError
from .mesh import Mesh, BaryPoint, PointBatch, bary_to_position, weight_at
from .selection import TriangleTable, choose_triangle

DEFAULT_TRIAL_CAP = 1_000_000


def sample_uniform_bary(xi1, xi2):
    """Map two uniform deviates to a uniformly distributed simplex point.

    u = 1 - sqrt(xi1), v = (1 - u) * xi2.
    """
    u = 1.0 - np.sqrt(xi1)
    return u, (1.0 - u) * xi2


def rejection_sample(
    mesh: Mesh,
    table: TriangleTable,
    i: int,
    rng: np.random.Generator,
    trial_cap: int = DEFAULT_TRIAL_CAP,
) -> BaryPoint:
    """Sample one point in triangle ``i`` (which must have positive mean weight).

    Consumes 3 deviates per trial. Raises IterationCapError past ``trial_cap``
    trials, which cannot plausibly happen with an exact weight_max envelope.
    """
    w_max = table.max_weight[i]
    for _ in range(trial_cap):
        u, v = sample_uniform_bary(rng.random(), rng.random())
        if rng.random() * w_max < weight_at(mesh, i, u, v):
            return BaryPoint(i, float(u), float(v), bary_to_position(mesh, i, u, v))
    raise IterationCapError(f"no acceptance within {trial_cap} trials")


def rejection_sample_points(
    table: TriangleTable,
    mesh: Mesh,
    n: int,
    rng: np.random.Generator,
    trial_cap: int = DEFAULT_TRIAL_CAP,
) -> tuple[PointBatch, int]:
    """Draw ``n`` samples by vectorized rejection; also returns the trial count.

    Each pending sample consumes one 3-deviate trial per round, so the total
    trial count is distributed exactly as for the scalar loop.
    """
    tri = choose_triangle(table, rng.random(n))
    w = mesh.corner_weights()[tri]
    w_max = table.max_weight[tri]

    u = np.empty(n)
    v = np.empty(n)
    pending = np.arange(n)
    trials = 0
    for _ in range(trial_cap):
        if pending.size == 0:
            break
        xi = rng.random((3, pending.size))
        ut, vt = sample_uniform_bary(xi[0], xi[1])
        wp = w[pending]
        phi = ut * (wp[:, 0] - wp[:, 2]) + vt * (wp[:, 1] - wp[:, 2]) + wp[:, 2]
        acc = xi[2] * w_max[pending] < phi
        hit = pending[acc]
        u[hit] = ut[acc]
        v[hit] = vt[acc]
        pending = pending[~acc]
        trials += acc.size
    else:
        raise IterationCapError(f"no acceptance within {trial_cap} trials")

    return PointBatch(tri, u, v, bary_to_position(mesh, tri, u, v)), trials
