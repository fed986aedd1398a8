"""Indexed triangle mesh with a non-negative density weight per vertex."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Mesh:
    """Immutable triangle mesh.

    Parameters
    ----------
    vertices : (n, 3) float array of 3D positions.
    triangles : (m, 3) int array of vertex indices.
    weights : (n,) float array of non-negative per-vertex density weights.
        Defaults to 1 everywhere (uniform area density).
    """

    vertices: np.ndarray
    triangles: np.ndarray
    weights: np.ndarray = None

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 3)
        t = np.asarray(self.triangles, dtype=np.intp).reshape(-1, 3)
        if self.weights is None:
            w = np.ones(len(v))
        else:
            w = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if len(w) != len(v):
            raise ValueError(
                f"got {len(w)} weights for {len(v)} vertices"
            )
        if t.size and (t.min() < 0 or t.max() >= len(v)):
            raise ValueError("triangle index out of range")
        if np.any(w < 0.0):
            raise ValueError("vertex weights must be non-negative")
        for a in (v, t, w):
            a.flags.writeable = False
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "triangles", t)
        object.__setattr__(self, "weights", w)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def with_weights(self, weights) -> "Mesh":
        """Copy of this mesh with a different weight field."""
        return Mesh(self.vertices, self.triangles, weights)

    def corner_weights(self, i=None) -> np.ndarray:
        """Vertex weights per triangle corner; (m, 3), or (3,) for one triangle."""
        if i is None:
            return self.weights[self.triangles]
        return self.weights[self.triangles[i]]


@dataclass(frozen=True)
class BaryPoint:
    """One sample: triangle index, barycentric (u, v) and the resolved 3D position."""

    triangle_index: int
    u: float
    v: float
    position: np.ndarray


@dataclass(frozen=True)
class PointBatch:
    """Columnar batch of samples (cheap for millions of points)."""

    triangle_index: np.ndarray
    u: np.ndarray
    v: np.ndarray
    positions: np.ndarray

    def __len__(self) -> int:
        return len(self.u)

    def __getitem__(self, k: int) -> BaryPoint:
        return BaryPoint(
            int(self.triangle_index[k]),
            float(self.u[k]),
            float(self.v[k]),
            self.positions[k],
        )


def triangle_areas(mesh: Mesh) -> np.ndarray:
    """Areas of all triangles; degenerate triangles get 0."""
    p = mesh.vertices[mesh.triangles]
    cross = np.cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0])
    return 0.5 * np.linalg.norm(cross, axis=-1)


def triangle_area(mesh: Mesh, i: int) -> float:
    """Area of triangle ``i`` (half the edge cross-product magnitude)."""
    a, b, c = mesh.vertices[mesh.triangles[i]]
    return 0.5 * float(np.linalg.norm(np.cross(b - a, c - a)))


def bary_to_position(mesh: Mesh, i, u, v) -> np.ndarray:
    """Map barycentric (u, v) in triangle ``i`` to a 3D position.

    The third coordinate is w = 1 - u - v; u, v and i may be arrays.
    """
    p = mesh.vertices[mesh.triangles[i]]
    u = np.asarray(u, dtype=np.float64)[..., None]
    v = np.asarray(v, dtype=np.float64)[..., None]
    return u * p[..., 0, :] + v * p[..., 1, :] + (1.0 - u - v) * p[..., 2, :]


def weight_at(mesh: Mesh, i, u, v):
    """Barycentric interpolation of the vertex weights at (u, v) in triangle ``i``."""
    w = mesh.weights[mesh.triangles[i]]
    wu, wv, ww = w[..., 0], w[..., 1], w[..., 2]
    return u * (wu - ww) + v * (wv - ww) + ww


def mean_weights(mesh: Mesh) -> np.ndarray:
    """Per-triangle mean vertex weight, equal to the area-averaged weight field."""
    return mesh.corner_weights().mean(axis=1)


def mean_weight(mesh: Mesh, i: int) -> float:
    """Mean of the three vertex weights of triangle ``i``."""
    return float(mesh.corner_weights(i).mean())


def max_weights(mesh: Mesh) -> np.ndarray:
    """Per-triangle maximum vertex weight (the field maximum, since it is linear)."""
    return mesh.corner_weights().max(axis=1)


def unit_right_triangle(weights=(1.0, 1.0, 1.0)) -> Mesh:
    """Single unit right triangle in the z=0 plane.

    Vertex order matches the barycentric convention: weights[0] sits at the
    u=1 corner, weights[1] at v=1, weights[2] at the origin (w=1).
    """
    vertices = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 0.0)]
    return Mesh(vertices, [(0, 1, 2)], weights)
