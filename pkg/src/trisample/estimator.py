"""Scikit-learn style front end so the sampler composes with pipelines and
parameter search (get_params/set_params/clone all work)."""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .inversion import NewtonConfig, sample_points
from .mesh import Mesh, PointBatch
from .rejection import DEFAULT_TRIAL_CAP, rejection_sample_points
from .selection import build_table


class MeshPointSampler(BaseEstimator):
    """Weighted random point sampler over a triangle mesh.

    fit() precomputes the triangle-selection table; sample() draws points
    whose surface density follows the mesh's per-vertex weights. Analogous to
    the sample() API of sklearn density estimators.

    Parameters
    ----------
    method : "inversion" (analytic CDF inversion, 3 deviates per point) or
        "rejection" (envelope rejection baseline).
    newton_tol, newton_max_iter : Newton controls for the inversion method.
    trial_cap : safety cap on rejection trials per point.
    """

    def __init__(
        self,
        method: str = "inversion",
        newton_tol: float = 5.0e-3,
        newton_max_iter: int = 20,
        trial_cap: int = DEFAULT_TRIAL_CAP,
    ):
        self.method = method
        self.newton_tol = newton_tol
        self.newton_max_iter = newton_max_iter
        self.trial_cap = trial_cap

    def fit(self, X: Mesh, y=None):
        """Validate the mesh and build the selection table. X is a Mesh."""
        if not isinstance(X, Mesh):
            raise TypeError("MeshPointSampler.fit expects a Mesh")
        if self.method not in ("inversion", "rejection"):
            raise ValueError(f"unknown method {self.method!r}")
        self.mesh_ = X
        self.table_ = build_table(X)
        return self

    def sample_bary(self, n_samples: int = 1, random_state=None) -> PointBatch:
        """Draw samples with barycentric bookkeeping kept."""
        check_is_fitted(self, "table_")
        rng = np.random.default_rng(random_state)
        if self.method == "inversion":
            cfg = NewtonConfig(tol=self.newton_tol, max_iter=self.newton_max_iter)
            return sample_points(self.table_, self.mesh_, n_samples, rng, cfg)
        batch, _ = rejection_sample_points(
            self.table_, self.mesh_, n_samples, rng, self.trial_cap
        )
        return batch

    def sample(self, n_samples: int = 1, random_state=None) -> np.ndarray:
        """Draw samples; returns an (n_samples, 3) array of surface positions."""
        return self.sample_bary(n_samples, random_state).positions
