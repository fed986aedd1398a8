"""Command-line front end: sample / validate / bench subcommands.

Exit codes: 0 success, 1 usage error, 2 data error, 3 validation failure.
"""

import argparse
import os
import sys

import numpy as np

from . import bench as bench_mod
from .errors import TriSampleError
from .estimator import MeshPointSampler
from .inversion import NewtonConfig, RelativeWeights
from .meshio import load_obj, load_weights, write_points
from .stats import run_validation_grid, write_report_csv
from .weights import curvature_weights, periodic_weights

PASS_RATE_REQUIRED = 0.95

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VALIDATION = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; this tool reserves 2 for
    # data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    return int(os.environ.get("TRISAMPLE_SEED", "0"))


def _resolve_weights(mesh, source: str):
    """Weight source: 'uniform', 'curvature', 'periodic:L=<x>' or a file path."""
    if source == "uniform":
        return mesh.weights
    if source == "curvature":
        return curvature_weights(mesh)
    if source.startswith("periodic:"):
        spec = source[len("periodic:"):]
        key, _, val = spec.partition("=")
        if key != "L" or not val:
            raise ValueError(f"expected periodic:L=<scale>, got {source!r}")
        return periodic_weights(mesh, float(val))
    return load_weights(source, mesh)


def _cmd_sample(args) -> int:
    mesh = load_obj(args.mesh)
    mesh = mesh.with_weights(_resolve_weights(mesh, args.weights))
    sampler = MeshPointSampler(method=args.method, newton_tol=args.newton_tol)
    sampler.fit(mesh)
    batch = sampler.sample_bary(args.count, random_state=args.seed)
    fmt = args.format or ("csv" if str(args.output).endswith(".csv") else "ply")
    write_points(batch, mesh, fmt, args.output)
    if args.verbose:
        table = sampler.table_
        print(f"total mass: {table.total_mass:.9g}")
        counts = np.bincount(batch.triangle_index, minlength=mesh.n_triangles)
        print(f"triangles selected: {np.count_nonzero(counts)}/{mesh.n_triangles}")
        print(f"max samples in one triangle: {counts.max() if len(counts) else 0}")
    print(f"wrote {len(batch)} points to {args.output} ({fmt})")
    return EXIT_OK


def _cmd_validate(args) -> int:
    cfg = NewtonConfig(tol=args.newton_tol)
    reports = run_validation_grid(
        grid_resolution=args.grid_resolution,
        samples_per_cell=args.samples_per_cell,
        cfg=cfg,
        base_seed=args.seed,
    )
    if args.csv:
        write_report_csv(reports, args.csv)
    n_pass = sum(r.passed for r in reports)
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        gp = r.grid_point
        print(
            f"({gp.phi_u_rel:+6.3f}, {gp.phi_v_rel:+6.3f})  "
            f"D={r.d_statistic:.5f}  D_crit={r.d_critical:.5f}  {status}"
        )
    rate = n_pass / len(reports)
    print(f"{n_pass}/{len(reports)} cells pass ({rate:.1%})")
    return EXIT_OK if rate >= PASS_RATE_REQUIRED else EXIT_VALIDATION


def _cmd_bench(args) -> int:
    rw = RelativeWeights(args.phi_u_rel, args.phi_v_rel)
    if not rw.in_valid_region():
        raise ValueError(f"({rw.phi_u_rel}, {rw.phi_v_rel}) is outside the valid region")
    reports = bench_mod.run_bench(
        rel_weights=rw,
        samples=args.samples,
        newton_tols=args.newton_tol or (5.0e-3, 1.0e-4, 1.0e-8),
        seed=args.seed,
    )
    print(bench_mod.format_report(reports))
    if args.csv:
        bench_mod.write_bench_csv(reports, args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trisample", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", parents=[], help="sample weighted points on a mesh")
    p.add_argument("--mesh", required=True, help="OBJ mesh path")
    p.add_argument(
        "--weights", default="uniform",
        help="weight source: file path, uniform, curvature, or periodic:L=<scale>",
    )
    p.add_argument("-n", "--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--method", choices=["inversion", "rejection"], default="inversion")
    p.add_argument("--newton-tol", type=float, default=5.0e-3)
    p.add_argument("-o", "--output", required=True, help="output point file")
    p.add_argument("--format", choices=["ply", "csv"], default=None,
                   help="default: by output extension, ply unless .csv")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("validate", help="KS-validate the sampler over the weight grid")
    p.add_argument("--grid-resolution", type=int, default=16)
    p.add_argument("--samples-per-cell", type=int, default=54289)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--newton-tol", type=float, default=5.0e-3)
    p.add_argument("--csv", default=None, help="write per-cell report CSV here")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("bench", help="time inversion vs rejection on one triangle")
    p.add_argument("--phi-u-rel", type=float, default=-3.0)
    p.add_argument("--phi-v-rel", type=float, default=-3.0)
    p.add_argument("--samples", type=int, default=10_000_000)
    p.add_argument("--newton-tol", type=float, action="append", default=None,
                   help="repeatable; default sweep 5e-3, 1e-4, 1e-8")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--csv", default=None, help="write the report table CSV here")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TriSampleError, OSError, ValueError) as exc:
        print(f"trisample: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
