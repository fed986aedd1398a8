"""File formats: OBJ meshes, sidecar weight files, CSV/PLY point clouds."""

import numpy as np

from .errors import (
    CountMismatchError,
    IndexOutOfRangeError,
    NegativeWeightError,
    ParseError,
)
from .mesh import Mesh, PointBatch, weight_at


def load_obj(path) -> Mesh:
    """Load the v/f subset of an OBJ file; weights initialize to 1.

    Faces with more than three vertices are fan-triangulated; 1-based and
    negative indices are resolved; normals, texcoords and materials are
    ignored.
    """
    vertices = []
    faces = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            tag = fields[0]
            if tag == "v":
                if len(fields) < 4:
                    raise ParseError("vertex record needs 3 coordinates", lineno)
                try:
                    vertices.append([float(x) for x in fields[1:4]])
                except ValueError:
                    raise ParseError(f"bad vertex coordinate in {line!r}", lineno)
            elif tag == "f":
                if len(fields) < 4:
                    raise ParseError("face record needs at least 3 indices", lineno)
                try:
                    idx = [int(f.split("/", 1)[0]) for f in fields[1:]]
                except ValueError:
                    raise ParseError(f"bad face index in {line!r}", lineno)
                resolved = []
                for k in idx:
                    if k > 0:
                        k -= 1
                    elif k < 0:
                        k += len(vertices)
                    else:
                        raise IndexOutOfRangeError("face index 0 is invalid", lineno)
                    if not 0 <= k < len(vertices):
                        raise IndexOutOfRangeError(
                            f"face references vertex {k + 1} of {len(vertices)}", lineno
                        )
                    resolved.append(k)
                for second, third in zip(resolved[1:-1], resolved[2:]):
                    faces.append((resolved[0], second, third))
            # everything else (vn, vt, usemtl, o, g, s, ...) is ignored
    return Mesh(
        np.asarray(vertices, dtype=np.float64).reshape(-1, 3),
        np.asarray(faces, dtype=np.intp).reshape(-1, 3),
    )


def load_weights(path, mesh: Mesh) -> np.ndarray:
    """Read one non-negative weight per line; blank lines and # comments skipped.

    The entry count must match the mesh vertex count.
    """
    values = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                w = float(line)
            except ValueError:
                raise ParseError(f"bad weight value {line!r}", lineno)
            if w < 0:
                raise NegativeWeightError(f"negative weight {w}", lineno)
            values.append(w)
    if len(values) != mesh.n_vertices:
        raise CountMismatchError(
            f"{len(values)} weights for {mesh.n_vertices} vertices"
        )
    return np.asarray(values, dtype=np.float64)


def write_points(batch: PointBatch, mesh: Mesh, fmt: str, path) -> None:
    """Write sampled points as 'csv' (x,y,z,weight) or ascii 'ply' (colored)."""
    if fmt == "csv":
        _write_csv(batch, mesh, path)
    elif fmt == "ply":
        _write_ply(batch, mesh, path)
    else:
        raise ValueError(f"unknown point format {fmt!r}")


def _sample_weights(batch: PointBatch, mesh: Mesh) -> np.ndarray:
    return np.asarray(weight_at(mesh, batch.triangle_index, batch.u, batch.v))


def _write_csv(batch: PointBatch, mesh: Mesh, path) -> None:
    w = _sample_weights(batch, mesh)
    with open(path, "w", newline="\n") as fh:
        fh.write("x,y,z,weight\n")
        for p, wi in zip(batch.positions, w):
            fh.write(f"{p[0]:.9g},{p[1]:.9g},{p[2]:.9g},{wi:.9g}\n")


def _hue_to_rgb(hue_deg: np.ndarray) -> np.ndarray:
    """HSV -> RGB with saturation and value 1; returns uint8 (n, 3)."""
    h = (np.asarray(hue_deg, dtype=np.float64) / 60.0) % 6.0
    x = 1.0 - np.abs(h % 2.0 - 1.0)
    zero = np.zeros_like(x)
    one = np.ones_like(x)
    sector = np.floor(h).astype(int)
    choices = [
        (one, x, zero),
        (x, one, zero),
        (zero, one, x),
        (zero, x, one),
        (x, zero, one),
        (one, zero, x),
    ]
    rgb = np.empty(h.shape + (3,))
    for s, (r, g, b) in enumerate(choices):
        m = sector == s
        rgb[m, 0] = r[m]
        rgb[m, 1] = g[m]
        rgb[m, 2] = b[m]
    return np.clip(np.rint(rgb * 255), 0, 255).astype(np.uint8)


def _write_ply(batch: PointBatch, mesh: Mesh, path) -> None:
    w = _sample_weights(batch, mesh)
    lo = float(mesh.weights.min()) if mesh.n_vertices else 0.0
    hi = float(mesh.weights.max()) if mesh.n_vertices else 1.0
    span = hi - lo
    frac = (w - lo) / span if span > 0 else np.zeros_like(w)
    # blue (240 deg) at the minimum weight through red (0 deg) at the maximum
    rgb = _hue_to_rgb(240.0 * (1.0 - np.clip(frac, 0.0, 1.0)))
    with open(path, "w", newline="\n") as fh:
        fh.write("ply\n")
        fh.write("format ascii 1.0\n")
        fh.write(f"element vertex {len(batch)}\n")
        fh.write("property float x\n")
        fh.write("property float y\n")
        fh.write("property float z\n")
        fh.write("property uchar red\n")
        fh.write("property uchar green\n")
        fh.write("property uchar blue\n")
        fh.write("end_header\n")
        for p, c in zip(batch.positions, rgb):
            fh.write(f"{p[0]:.9g} {p[1]:.9g} {p[2]:.9g} {c[0]} {c[1]} {c[2]}\n")
