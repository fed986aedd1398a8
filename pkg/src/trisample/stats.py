"""Statistical validation: analytic marginal CDFs, empirical CDFs and KS tests
over a grid covering the valid relative-weight region."""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import EmptySampleError
from .inversion import (
    NewtonConfig,
    RelativeWeights,
    marginal_cdf_u,
    sample_points,
)
from .mesh import Mesh, unit_right_triangle
from .rejection import rejection_sample_points
from .selection import build_table

# One-sample KS critical coefficient at the 99% confidence level:
# D_crit = 1.63 / sqrt(N).
KS_COEFF_99 = 1.63


@dataclass(frozen=True)
class KsReport:
    """Outcome of one KS test, optionally tagged with its grid point."""

    grid_point: RelativeWeights | None
    sample_count: int
    d_statistic: float
    d_critical: float
    passed: bool


def analytic_cdf_v(v, rw: RelativeWeights):
    """Unconditional marginal CDF of v; mirror of the u marginal under u<->v."""
    mirrored = RelativeWeights(rw.phi_v_rel, rw.phi_u_rel)
    return marginal_cdf_u(v, mirrored)


def analytic_cdf_u(u, rw: RelativeWeights):
    """Unconditional marginal CDF of u (alias kept for symmetry with v)."""
    return marginal_cdf_u(u, rw)


class EmpiricalCdf:
    """Right-continuous step function F(x) = #(samples <= x) / N."""

    def __init__(self, samples):
        s = np.sort(np.asarray(samples, dtype=np.float64).ravel())
        if s.size == 0:
            raise EmptySampleError("empirical CDF of an empty sample")
        self.samples = s

    def __call__(self, x):
        return np.searchsorted(self.samples, x, side="right") / self.samples.size


def empirical_cdf(samples) -> EmpiricalCdf:
    return EmpiricalCdf(samples)


def ks_statistic(samples, cdf) -> float:
    """Sup-distance between the empirical CDF of ``samples`` and ``cdf``."""
    s = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    if s.size == 0:
        raise EmptySampleError("KS statistic of an empty sample")
    n = s.size
    f = np.asarray(cdf(s), dtype=np.float64)
    steps = np.arange(1, n + 1) / n
    return float(max((steps - f).max(), (f - steps + 1.0 / n).max()))


def ks_one_sample(samples, cdf, grid_point: RelativeWeights | None = None) -> KsReport:
    """One-sample KS test at the 99% confidence level.

    Requires N >= 1000; the asymptotic critical value 1.63/sqrt(N) is poor
    below that.
    """
    n = np.asarray(samples).size
    if n < 1000:
        raise ValueError("ks_one_sample needs at least 1000 samples")
    d = ks_statistic(samples, cdf)
    d_crit = KS_COEFF_99 / np.sqrt(n)
    return KsReport(grid_point, n, d, d_crit, d < d_crit)


def ks_two_sample(a, b) -> KsReport:
    """Two-sample KS test at the 99% confidence level."""
    a = np.sort(np.asarray(a, dtype=np.float64).ravel())
    b = np.sort(np.asarray(b, dtype=np.float64).ravel())
    if a.size == 0 or b.size == 0:
        raise EmptySampleError("two-sample KS with an empty sample")
    both = np.concatenate([a, b])
    fa = np.searchsorted(a, both, side="right") / a.size
    fb = np.searchsorted(b, both, side="right") / b.size
    d = float(np.abs(fa - fb).max())
    d_crit = KS_COEFF_99 * float(np.sqrt((a.size + b.size) / (a.size * b.size)))
    return KsReport(None, a.size + b.size, d, d_crit, d < d_crit)


def grid_cells(resolution: int = 16) -> list[RelativeWeights]:
    """Centers of the resolution x resolution grid over [-3,3]^2 that fall
    inside the valid relative-weight triangle (boundary inclusive)."""
    step = 6.0 / resolution
    centers = -3.0 + step * (np.arange(resolution) + 0.5)
    out = []
    for a in centers:
        for b in centers:
            rw = RelativeWeights(float(a), float(b))
            if rw.in_valid_region(tol=1e-12):
                out.append(rw)
    return out


def mesh_for_weights(rw: RelativeWeights) -> Mesh:
    """Unit right triangle whose vertex weights realize ``rw`` with mean 1."""
    wu, wv, ww = rw.vertex_weights()
    # non-negativity can land epsilon below zero on the region boundary
    return unit_right_triangle((max(wu, 0.0), max(wv, 0.0), max(ww, 0.0)))


def run_validation_grid(
    grid_resolution: int = 16,
    samples_per_cell: int = 54289,
    cfg: NewtonConfig = NewtonConfig(),
    base_seed: int = 0,
    method: str = "inversion",
) -> list[KsReport]:
    """KS-test the sampled v marginal against theory on every valid grid cell.

    Each cell gets its own deterministic RNG stream derived from
    (base_seed, cell index).
    """
    reports = []
    for ci, rw in enumerate(grid_cells(grid_resolution)):
        rng = np.random.default_rng([base_seed, ci])
        mesh = mesh_for_weights(rw)
        table = build_table(mesh)
        if method == "inversion":
            batch = sample_points(table, mesh, samples_per_cell, rng, cfg)
        elif method == "rejection":
            batch, _ = rejection_sample_points(table, mesh, samples_per_cell, rng)
        else:
            raise ValueError(f"unknown method {method!r}")
        reports.append(
            ks_one_sample(batch.v, lambda v: analytic_cdf_v(v, rw), grid_point=rw)
        )
    return reports


def write_report_csv(reports: list[KsReport], path) -> None:
    """Write KS reports as CSV: phi_u_rel, phi_v_rel, n, d, d_crit, pass."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["phi_u_rel", "phi_v_rel", "n", "d", "d_crit", "pass"])
        for r in reports:
            gp = r.grid_point
            writer.writerow(
                [
                    "" if gp is None else f"{gp.phi_u_rel:.9g}",
                    "" if gp is None else f"{gp.phi_v_rel:.9g}",
                    r.sample_count,
                    f"{r.d_statistic:.9g}",
                    f"{r.d_critical:.9g}",
                    int(r.passed),
                ]
            )
