"""Analytic inversion sampling of barycentric (u, v) under a linear weight field.

The in-triangle density is fully parameterized by the pair of relative weights
(phi_u_rel, phi_v_rel). Sampling inverts the cubic marginal CDF of u with a
clamped Newton iteration, then inverts the quadratic conditional CDF of v in
closed form, picking the quadratic root that lands inside the simplex.
"""

import sys
from dataclasses import dataclass

import numpy as np

from .errors import AllZeroWeightsError
from .mesh import Mesh, BaryPoint, PointBatch, bary_to_position
from .selection import TriangleTable, choose_triangle

# Below this |phi_v_rel| the conditional CDF of v degenerates to the uniform
# limit v = (1-u)*xi and the quadratic inversion (whose tau diverges) is skipped.
UNIFORM_LIMIT_EPS = 1.0e-6

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class RelativeWeights:
    """Per-triangle normalized weight differences (phi_u - phi_w)/<phi>, (phi_v - phi_w)/<phi>.

    Non-negativity of the vertex weights confines valid pairs to the closed
    triangle with corners (3, 0), (0, 3), (-3, -3); the origin is uniform
    weighting.
    """

    phi_u_rel: float
    phi_v_rel: float

    def in_valid_region(self, tol: float = 1e-9) -> bool:
        a, b = self.phi_u_rel, self.phi_v_rel
        return (
            2 * a - b >= -3 - tol
            and 2 * b - a >= -3 - tol
            and a + b <= 3 + tol
        )

    def vertex_weights(self, mean: float = 1.0) -> tuple[float, float, float]:
        """Vertex weight triple realizing these relative weights (unique up to scale)."""
        ww = mean * (1.0 - (self.phi_u_rel + self.phi_v_rel) / 3.0)
        return ww + self.phi_u_rel * mean, ww + self.phi_v_rel * mean, ww


def relative_weights(phi_u: float, phi_v: float, phi_w: float) -> RelativeWeights:
    """Relative weights of a triangle from its three vertex weights.

    Raises AllZeroWeightsError for an all-zero triple; such triangles carry
    zero selection probability and must never reach the in-triangle sampler.
    """
    mean = (phi_u + phi_v + phi_w) / 3.0
    if mean <= 0.0:
        raise AllZeroWeightsError("all three vertex weights are zero")
    return RelativeWeights((phi_u - phi_w) / mean, (phi_v - phi_w) / mean)


@dataclass(frozen=True)
class NewtonConfig:
    """Knobs of the Newton inversion of the u marginal CDF."""

    tol: float = 5.0e-3
    max_iter: int = 20
    step_clamp: float = 0.25
    u_init: float = 0.5

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not 0 < self.step_clamp <= 0.5:
            raise ValueError("step_clamp must be in (0, 0.5]")
        if not 0 < self.u_init < 1:
            raise ValueError("u_init must be in (0, 1)")


def _cubic_coeff(pu, pv):
    return (2.0 * np.asarray(pu) - np.asarray(pv)) / 3.0


def marginal_cdf_u(u, rw: RelativeWeights):
    """Marginal CDF of u: u(2-u) - (2*phi_u_rel - phi_v_rel)/3 * u(1-u)^2."""
    return _cdf_u(u, _cubic_coeff(rw.phi_u_rel, rw.phi_v_rel))


def _cdf_u(u, l):
    u = np.asarray(u, dtype=np.float64)
    u1 = 1.0 - u
    return u * (2.0 - u) - l * u * u1 * u1


def marginal_cdf_u_deriv(u, rw: RelativeWeights):
    """Marginal density of u, (1-u)(2 + l(3u-1)), floored at machine epsilon."""
    l = _cubic_coeff(rw.phi_u_rel, rw.phi_v_rel)
    u = np.asarray(u, dtype=np.float64)
    return np.maximum((1.0 - u) * (2.0 + l * (3.0 * u - 1.0)), _EPS)


def _newton_u(xi, l, cfg: NewtonConfig) -> np.ndarray:
    """Invert the cubic u-CDF for an array of deviates by clamped Newton steps.

    Each lane stops once its step drops below cfg.tol; iterates stay inside
    [eps, 1-eps] and steps are clamped to +-cfg.step_clamp.
    """
    xi = np.asarray(xi, dtype=np.float64)
    l = np.broadcast_to(np.asarray(l, dtype=np.float64), xi.shape)
    u = np.full(xi.shape, cfg.u_init)
    active = np.ones(xi.shape, dtype=bool)
    for _ in range(cfg.max_iter):
        ua = u[active]
        la = l[active]
        u1 = 1.0 - ua
        p = ua * (2.0 - ua) - la * ua * u1 * u1 - xi[active]
        pd = np.maximum(u1 * (2.0 + la * (3.0 * ua - 1.0)), _EPS)
        du = np.clip(p / pd, -cfg.step_clamp, cfg.step_clamp)
        u[active] = np.clip(ua - du, _EPS, 1.0 - _EPS)
        active[active] = np.abs(du) >= cfg.tol
        if not active.any():
            break
    return u


def sample_u(xi_u, rw: RelativeWeights, cfg: NewtonConfig = NewtonConfig()):
    """Sample the u barycoordinate by Newton inversion of its marginal CDF."""
    l = _cubic_coeff(rw.phi_u_rel, rw.phi_v_rel)
    u = _newton_u(np.atleast_1d(xi_u), l, cfg)
    return float(u[0]) if np.ndim(xi_u) == 0 else u


def tau(u, rw: RelativeWeights):
    """Root-locus parameter of the quadratic v inversion; any real value.

    Only meaningful for |phi_v_rel| >= UNIFORM_LIMIT_EPS; sample_v guards this.
    """
    u = np.asarray(u, dtype=np.float64)
    return 1.0 / 3.0 - (1.0 + (u - 1.0 / 3.0) * rw.phi_u_rel) / rw.phi_v_rel


def _invert_v(xi, u, pu, pv) -> np.ndarray:
    xi = np.asarray(xi, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    pu = np.asarray(pu, dtype=np.float64)
    pv = np.asarray(pv, dtype=np.float64)
    near_uniform = np.abs(pv) < UNIFORM_LIMIT_EPS
    safe_pv = np.where(near_uniform, 1.0, pv)
    t = 1.0 / 3.0 - (1.0 + (u - 1.0 / 3.0) * pu) / safe_pv
    rim = t + u - 1.0
    q = np.sqrt(t * t * (1.0 - xi) + rim * rim * xi)
    v = np.where(t <= 0.5 * (1.0 - u), t + q, t - q)
    v = np.where(near_uniform, (1.0 - u) * xi, v)
    # cancellation at large |t| can land epsilon outside the simplex
    return np.clip(v, 0.0, 1.0 - u)


def sample_v(xi_v, u, rw: RelativeWeights):
    """Sample v given u by closed-form inversion of the conditional CDF.

    Picks the quadratic root on the correct side of tau = (1-u)/2 so the
    result always lies in [0, 1-u]; falls back to the uniform-limit formula
    (1-u)*xi when |phi_v_rel| is below UNIFORM_LIMIT_EPS.
    """
    v = _invert_v(np.atleast_1d(xi_v), u, rw.phi_u_rel, rw.phi_v_rel)
    return float(v[0]) if np.ndim(xi_v) == 0 else v


def conditional_cdf_v(v, u, rw: RelativeWeights):
    """Conditional CDF of v given u (quadratic in v); used for verification."""
    pu_dens = (1.0 - u) * (2.0 + _cubic_coeff(rw.phi_u_rel, rw.phi_v_rel) * (3.0 * u - 1.0))
    bracket = (
        1.0
        + (u - 1.0 / 3.0) * rw.phi_u_rel
        + (np.asarray(v) / 2.0 - 1.0 / 3.0) * rw.phi_v_rel
    )
    return 2.0 * np.asarray(v) * bracket / pu_dens


def joint_density(u, v, rw: RelativeWeights):
    """Joint density of (u, v) over the unit simplex."""
    return 2.0 * (
        np.asarray(u) * rw.phi_u_rel
        + np.asarray(v) * rw.phi_v_rel
        + 1.0
        - (rw.phi_u_rel + rw.phi_v_rel) / 3.0
    )


def sample_point(
    table: TriangleTable,
    mesh: Mesh,
    rng: np.random.Generator,
    cfg: NewtonConfig = NewtonConfig(),
) -> BaryPoint:
    """Draw one weighted sample; consumes exactly 3 uniform deviates."""
    i = choose_triangle(table, rng.random())
    wu, wv, ww = mesh.corner_weights(i)
    rw = relative_weights(wu, wv, ww)
    u = sample_u(rng.random(), rw, cfg)
    v = sample_v(rng.random(), u, rw)
    return BaryPoint(i, u, v, bary_to_position(mesh, i, u, v))


def sample_points(
    table: TriangleTable,
    mesh: Mesh,
    n: int,
    rng: np.random.Generator,
    cfg: NewtonConfig = NewtonConfig(),
) -> PointBatch:
    """Draw ``n`` weighted samples, vectorized; consumes exactly 3n deviates."""
    tri = choose_triangle(table, rng.random(n))
    w = mesh.corner_weights()[tri]
    mean = table.mean_weight[tri]
    pu = (w[:, 0] - w[:, 2]) / mean
    pv = (w[:, 1] - w[:, 2]) / mean
    u = _newton_u(rng.random(n), _cubic_coeff(pu, pv), cfg)
    v = _invert_v(rng.random(n), u, pu, pv)
    return PointBatch(tri, u, v, bary_to_position(mesh, tri, u, v))
