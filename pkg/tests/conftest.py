"""Shared mesh builders for the test suite."""

import numpy as np
import pytest

from trisample import Mesh


def icosphere(subdivisions: int = 2, radius: float = 1.0) -> Mesh:
    """Closed genus-0 sphere mesh from a subdivided icosahedron."""
    t = (1.0 + np.sqrt(5.0)) / 2.0
    verts = np.array(
        [
            (-1, t, 0), (1, t, 0), (-1, -t, 0), (1, -t, 0),
            (0, -1, t), (0, 1, t), (0, -1, -t), (0, 1, -t),
            (t, 0, -1), (t, 0, 1), (-t, 0, -1), (-t, 0, 1),
        ],
        dtype=float,
    )
    faces = [
        (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
        (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
        (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
        (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
    ]
    verts = list(verts / np.linalg.norm(verts[0]))
    for _ in range(subdivisions):
        cache = {}

        def midpoint(a, b):
            key = (min(a, b), max(a, b))
            if key not in cache:
                m = (np.asarray(verts[a]) + np.asarray(verts[b])) / 2.0
                verts.append(m / np.linalg.norm(m))
                cache[key] = len(verts) - 1
            return cache[key]

        new_faces = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new_faces
    return Mesh(np.asarray(verts) * radius, faces)


def torus(n_major: int = 24, n_minor: int = 12, R: float = 2.0, r: float = 0.5) -> Mesh:
    """Closed genus-1 torus mesh (triangulated parameter grid with wrap-around)."""
    verts = []
    for i in range(n_major):
        a = 2 * np.pi * i / n_major
        for j in range(n_minor):
            b = 2 * np.pi * j / n_minor
            verts.append(
                (
                    (R + r * np.cos(b)) * np.cos(a),
                    (R + r * np.cos(b)) * np.sin(a),
                    r * np.sin(b),
                )
            )
    faces = []
    for i in range(n_major):
        for j in range(n_minor):
            v00 = i * n_minor + j
            v01 = i * n_minor + (j + 1) % n_minor
            v10 = ((i + 1) % n_major) * n_minor + j
            v11 = ((i + 1) % n_major) * n_minor + (j + 1) % n_minor
            faces += [(v00, v10, v11), (v00, v11, v01)]
    return Mesh(verts, faces)


def flat_grid(n: int = 5) -> Mesh:
    """Planar (n+1)^2-vertex triangulated square grid in z=0."""
    verts = [(i, j, 0.0) for i in range(n + 1) for j in range(n + 1)]
    faces = []
    for i in range(n):
        for j in range(n):
            v00 = i * (n + 1) + j
            v01 = v00 + 1
            v10 = v00 + n + 1
            v11 = v10 + 1
            faces += [(v00, v10, v11), (v00, v11, v01)]
    return Mesh(verts, faces)


def random_mesh(rng: np.random.Generator, n_triangles: int = 16) -> Mesh:
    """Triangle soup with random geometry and random non-negative weights."""
    verts = rng.normal(size=(3 * n_triangles, 3))
    faces = np.arange(3 * n_triangles).reshape(-1, 3)
    weights = rng.random(len(verts)) * 3.0
    return Mesh(verts, faces, weights)


@pytest.fixture
def rng():
    return np.random.default_rng(20240824)
