"""Statistically unbiased weighted point sampling on triangle meshes.

Point density per unit area is prescribed by barycentric interpolation of
non-negative per-vertex weights. The analytic inversion sampler draws each
point from exactly three uniform deviates; a rejection sampler provides the
general baseline, and the stats module carries the KS validation machinery.
"""

from .errors import (
    AllZeroWeightsError,
    CountMismatchError,
    EmptySampleError,
    IndexOutOfRangeError,
    IterationCapError,
    MeshFileError,
    NegativeWeightError,
    ParseError,
    TriSampleError,
    ZeroMassError,
)
from .estimator import MeshPointSampler
from .inversion import (
    NewtonConfig,
    RelativeWeights,
    relative_weights,
    sample_point,
    sample_points,
    sample_u,
    sample_v,
)
from .mesh import (
    BaryPoint,
    Mesh,
    PointBatch,
    bary_to_position,
    mean_weight,
    triangle_area,
    unit_right_triangle,
    weight_at,
)
from .meshio import load_obj, load_weights, write_points
from .rejection import rejection_sample, rejection_sample_points, sample_uniform_bary
from .selection import TriangleTable, build_table, choose_triangle
from .stats import (
    KsReport,
    analytic_cdf_v,
    empirical_cdf,
    ks_one_sample,
    ks_two_sample,
    run_validation_grid,
)
from .weights import angle_deficits, curvature_weights, periodic_weights

__version__ = "0.1.0"

__all__ = [
    "AllZeroWeightsError",
    "BaryPoint",
    "CountMismatchError",
    "EmptySampleError",
    "IndexOutOfRangeError",
    "IterationCapError",
    "KsReport",
    "Mesh",
    "MeshFileError",
    "MeshPointSampler",
    "NegativeWeightError",
    "NewtonConfig",
    "ParseError",
    "PointBatch",
    "RelativeWeights",
    "TriSampleError",
    "TriangleTable",
    "ZeroMassError",
    "analytic_cdf_v",
    "angle_deficits",
    "bary_to_position",
    "build_table",
    "choose_triangle",
    "curvature_weights",
    "empirical_cdf",
    "ks_one_sample",
    "ks_two_sample",
    "load_obj",
    "load_weights",
    "mean_weight",
    "periodic_weights",
    "rejection_sample",
    "rejection_sample_points",
    "relative_weights",
    "run_validation_grid",
    "sample_point",
    "sample_points",
    "sample_u",
    "sample_uniform_bary",
    "sample_v",
    "triangle_area",
    "unit_right_triangle",
    "weight_at",
    "write_points",
]
