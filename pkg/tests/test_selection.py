import numpy as np
import pytest

from trisample import Mesh, ZeroMassError, build_table, choose_triangle
from trisample.selection import TriangleTable

from conftest import random_mesh


def two_triangle_mesh(areas=(1.0, 2.0), weights=(2.0, 1.0)):
    """Disjoint right triangles with prescribed areas and constant per-triangle weights."""
    verts = []
    faces = []
    w = []
    for area, wt in zip(areas, weights):
        leg = np.sqrt(2.0 * area)
        base = len(verts)
        x0 = 10.0 * base
        verts += [(x0, 0, 0), (x0 + leg, 0, 0), (x0, leg, 0)]
        faces.append((base, base + 1, base + 2))
        w += [wt] * 3
    return Mesh(verts, faces, w)


class TestBuildTable:
    def test_two_triangles_equal_mass(self):
        table = build_table(two_triangle_mesh((1, 2), (2, 1)))
        assert np.allclose(table.cdf, [0.5, 1.0])
        assert table.cdf[-1] == 1.0
        assert table.total_mass == pytest.approx(4.0)

    def test_single_triangle(self):
        table = build_table(two_triangle_mesh((1,), (0.7,)))
        assert np.array_equal(table.cdf, [1.0])

    def test_zero_mass_triangle_excluded(self):
        table = build_table(two_triangle_mesh((1, 1), (0.0, 3.0)))
        assert np.allclose(table.cdf, [0.0, 1.0])
        for xi in (0.0, 0.3, 0.999999):
            assert choose_triangle(table, xi) == 1

    def test_zero_total_mass_raises(self):
        with pytest.raises(ZeroMassError):
            build_table(two_triangle_mesh((1, 1), (0.0, 0.0)))
        degenerate = Mesh([(0, 0, 0)] * 3, [(0, 1, 2)], (1, 1, 1))
        with pytest.raises(ZeroMassError):
            build_table(degenerate)

    def test_max_weight_is_vertex_max(self, rng):
        m = random_mesh(rng, 10)
        table = build_table(m)
        assert np.allclose(table.max_weight, m.weights[m.triangles].max(axis=1))


def table_from_cdf(cdf):
    cdf = np.asarray(cdf, dtype=float)
    n = len(cdf)
    return TriangleTable(cdf, np.ones(n), np.ones(n), np.ones(n), 1.0)


class TestChooseTriangle:
    def test_bracketing_examples(self):
        table = table_from_cdf([0.5, 1.0])
        assert choose_triangle(table, 0.3) == 0
        assert choose_triangle(table, 0.5) == 1  # ties resolve upward
        assert choose_triangle(table_from_cdf([0.0, 1.0]), 0.0) == 1

    def test_array_input(self):
        table = table_from_cdf([0.25, 0.25, 1.0])
        idx = choose_triangle(table, np.array([0.0, 0.2, 0.25, 0.9]))
        assert idx.tolist() == [0, 0, 2, 2]

    def test_agrees_with_linear_scan(self, rng):
        for _ in range(20):
            masses = rng.random(rng.integers(1, 12)) * (rng.random() > 0.3)
            masses[rng.random(masses.shape) < 0.3] = 0.0
            if masses.sum() == 0:
                continue
            cdf = np.cumsum(masses) / masses.sum()
            cdf[-1] = 1.0
            table = table_from_cdf(cdf)
            full = np.concatenate([[0.0], cdf])
            xis = np.concatenate([rng.random(200), cdf[:-1], [0.0]])
            xis = xis[xis < 1.0]  # deviates are drawn from [0, 1)
            for xi in xis:
                k = choose_triangle(table, xi)
                # linear-scan oracle for cdf[k-1] <= xi < cdf[k]
                expect = next(
                    j for j in range(len(cdf)) if full[j] <= xi < full[j + 1]
                )
                assert k == expect

    def test_positive_mass_always(self, rng):
        m = random_mesh(rng, 20)
        weights = m.weights.copy()
        weights[m.triangles[::3].ravel()] = 0.0  # zero out every third triangle
        m = m.with_weights(weights)
        table = build_table(m)
        mass = table.area * table.mean_weight
        idx = choose_triangle(table, rng.random(5000))
        assert np.all(mass[idx] > 0)

    def test_selection_frequencies(self, rng):
        m = random_mesh(rng, 48)
        table = build_table(m)
        p = table.area * table.mean_weight / table.total_mass
        n = 1_000_000
        counts = np.bincount(choose_triangle(table, rng.random(n)), minlength=len(p))
        sigma = np.sqrt(np.maximum(n * p * (1 - p), 1.0))
        assert np.all(np.abs(counts - n * p) < 4.0 * sigma)
