"""Procedural per-vertex weight fields: periodic density and discrete curvature."""

import numpy as np

from .mesh import Mesh, triangle_areas


def periodic_weights(mesh: Mesh, length_scale: float) -> np.ndarray:
    """|cos(x/L) cos(y/L) cos(z/L)| evaluated at every vertex; values in [0, 1]."""
    if length_scale <= 0:
        raise ValueError("length_scale must be positive")
    c = np.cos(mesh.vertices / length_scale)
    return np.abs(c.prod(axis=1))


def angle_deficits(mesh: Mesh) -> np.ndarray:
    """Raw angle deficit 2*pi - (sum of incident interior angles) per vertex.

    On a closed mesh the deficits sum to 2*pi times the Euler characteristic
    (discrete Gauss-Bonnet). Vertices with no incident triangles get 0.
    """
    deficit = np.full(mesh.n_vertices, 2.0 * np.pi)
    deficit[_incidence_counts(mesh) == 0] = 0.0
    p = mesh.vertices[mesh.triangles]
    for corner in range(3):
        a = p[:, corner]
        b = p[:, (corner + 1) % 3]
        c = p[:, (corner + 2) % 3]
        e1 = b - a
        e2 = c - a
        cosang = (e1 * e2).sum(axis=1)
        sinang = np.linalg.norm(np.cross(e1, e2), axis=1)
        ang = np.arctan2(sinang, cosang)
        np.subtract.at(deficit, mesh.triangles[:, corner], ang)
    return deficit


def curvature_weights(mesh: Mesh) -> np.ndarray:
    """Discrete Gaussian-curvature magnitude per vertex.

    |angle deficit| divided by one third of the incident triangle area, the
    usual barycentric vertex area. Boundary and isolated vertices get 0.
    """
    deficit = np.abs(angle_deficits(mesh))
    deficit[_boundary_vertices(mesh)] = 0.0
    area3 = np.zeros(mesh.n_vertices)
    np.add.at(area3, mesh.triangles.ravel(), np.repeat(triangle_areas(mesh) / 3.0, 3))
    out = np.zeros(mesh.n_vertices)
    np.divide(deficit, area3, out=out, where=area3 > 0)
    return out


def _incidence_counts(mesh: Mesh) -> np.ndarray:
    counts = np.zeros(mesh.n_vertices, dtype=np.intp)
    np.add.at(counts, mesh.triangles.ravel(), 1)
    return counts


def _boundary_vertices(mesh: Mesh) -> np.ndarray:
    """Mask of vertices on an edge not shared by exactly two triangles."""
    t = mesh.triangles
    edges = np.concatenate([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])
    edges = np.sort(edges, axis=1)
    uniq, counts = np.unique(edges, axis=0, return_counts=True)
    mask = np.zeros(mesh.n_vertices, dtype=bool)
    open_edges = uniq[counts != 2]
    mask[open_edges.ravel()] = True
    mask[_incidence_counts(mesh) == 0] = True
    return mask
