import numpy as np
import pytest
from hypothesis import given, strategies as st

from trisample import Mesh, bary_to_position, mean_weight, triangle_area, weight_at
from trisample.mesh import triangle_areas, unit_right_triangle

from conftest import random_mesh

nonneg = st.floats(min_value=0.0, max_value=1e6, allow_nan=False)


def tri_mesh(vertices, weights=(1.0, 1.0, 1.0)):
    return Mesh(vertices, [(0, 1, 2)], weights)


class TestMeshConstruction:
    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            tri_mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], (1.0, -0.5, 1.0))

    def test_bad_index_rejected(self):
        with pytest.raises(ValueError):
            Mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 3)], (1, 1, 1))

    def test_weight_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)], (1, 1))

    def test_immutable(self):
        m = unit_right_triangle()
        with pytest.raises(ValueError):
            m.vertices[0, 0] = 5.0

    def test_default_weights_are_one(self):
        m = Mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 2)])
        assert np.all(m.weights == 1.0)


class TestTriangleArea:
    def test_right_triangle(self):
        m = tri_mesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
        assert triangle_area(m, 0) == 0.5

    def test_degenerate(self):
        m = tri_mesh([(1, 2, 3), (1, 2, 3), (1, 2, 3)])
        assert triangle_area(m, 0) == 0.0

    def test_equilateral_side_two(self):
        s = 2.0
        m = tri_mesh([(0, 0, 0), (s, 0, 0), (s / 2, s * np.sqrt(3) / 2, 0)])
        assert triangle_area(m, 0) == pytest.approx(np.sqrt(3) / 4 * s * s, rel=1e-12)

    def test_vectorized_matches_scalar(self, rng):
        m = random_mesh(rng, 24)
        areas = triangle_areas(m)
        for i in range(m.n_triangles):
            assert areas[i] == pytest.approx(triangle_area(m, i), rel=1e-14)


class TestBaryToPosition:
    def test_corners(self):
        m = tri_mesh([(1, 2, 3), (4, 5, 6), (7, 8, 9)])
        assert np.allclose(bary_to_position(m, 0, 1.0, 0.0), (1, 2, 3))
        assert np.allclose(bary_to_position(m, 0, 0.0, 1.0), (4, 5, 6))
        assert np.allclose(bary_to_position(m, 0, 0.0, 0.0), (7, 8, 9))

    def test_centroid(self):
        m = tri_mesh([(0, 0, 0), (3, 0, 0), (0, 3, 0)])
        assert np.allclose(bary_to_position(m, 0, 1 / 3, 1 / 3), (1, 1, 0))

    def test_in_plane_and_hull(self, rng):
        m = random_mesh(rng, 8)
        for i in range(m.n_triangles):
            a, b, c = m.vertices[m.triangles[i]]
            n = np.cross(b - a, c - a)
            n /= np.linalg.norm(n)
            for _ in range(20):
                u = rng.random()
                v = rng.random() * (1 - u)
                p = bary_to_position(m, i, u, v)
                assert abs(np.dot(p - a, n)) < 1e-12 * max(1.0, np.abs(p).max())
                # inside the hull: barycentric reconstruction is non-negative
                sol, *_ = np.linalg.lstsq(
                    np.column_stack([a - c, b - c]), p - c, rcond=None
                )
                assert sol[0] >= -1e-9 and sol[1] >= -1e-9
                assert sol.sum() <= 1 + 1e-9


class TestWeightAt:
    def test_vertex_values(self):
        m = unit_right_triangle((1.0, 0.01, 0.4))
        assert weight_at(m, 0, 1.0, 0.0) == pytest.approx(1.0)
        assert weight_at(m, 0, 0.0, 1.0) == pytest.approx(0.01)
        assert weight_at(m, 0, 0.0, 0.0) == pytest.approx(0.4)

    def test_centroid_equals_mean(self):
        m = unit_right_triangle((1.0, 0.01, 0.4))
        assert weight_at(m, 0, 1 / 3, 1 / 3) == pytest.approx(0.47)
        assert mean_weight(m, 0) == pytest.approx(0.47)

    @given(nonneg, nonneg, nonneg)
    def test_vertices_and_centroid_property(self, wu, wv, ww):
        m = unit_right_triangle((wu, wv, ww))
        # interpolation round-off scales with the largest weight
        tol = 1e-12 * max(1.0, wu, wv, ww)
        assert weight_at(m, 0, 1.0, 0.0) == pytest.approx(wu, abs=tol)
        assert weight_at(m, 0, 0.0, 1.0) == pytest.approx(wv, abs=tol)
        assert weight_at(m, 0, 0.0, 0.0) == pytest.approx(ww, abs=tol)
        mean = (wu + wv + ww) / 3.0
        assert weight_at(m, 0, 1 / 3, 1 / 3) == pytest.approx(mean, abs=1e3 * tol)
        assert mean_weight(m, 0) == pytest.approx(mean, abs=tol)

    def test_mean_weight_special_cases(self):
        assert mean_weight(unit_right_triangle((0, 0, 0)), 0) == 0.0
        for c in (0.3, 1.0, 7.5):
            assert mean_weight(unit_right_triangle((c, c, c)), 0) == pytest.approx(c)


def test_area_average_matches_mean_weight(rng):
    # stratified centroid quadrature over >= 10^4 equal-area sub-triangles
    n = 100
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    keep_up = (i + j) < n
    keep_dn = (i + j) < n - 1
    u = np.concatenate([(i[keep_up] + 1 / 3) / n, (i[keep_dn] + 2 / 3) / n])
    v = np.concatenate([(j[keep_up] + 1 / 3) / n, (j[keep_dn] + 2 / 3) / n])
    assert u.size >= 10_000
    m = random_mesh(rng, 6)
    for k in range(m.n_triangles):
        avg = np.mean(weight_at(m, k, u, v))
        mw = mean_weight(m, k)
        assert avg == pytest.approx(mw, rel=1e-3)
