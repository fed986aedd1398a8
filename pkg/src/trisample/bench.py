"""Single-triangle performance harness: inversion vs rejection, ns per sample."""

import csv
import time
from dataclasses import dataclass

import numpy as np

from .inversion import NewtonConfig, RelativeWeights, sample_points
from .rejection import rejection_sample_points
from .selection import build_table
from .stats import mesh_for_weights

CHUNK = 1 << 20


@dataclass(frozen=True)
class BenchReport:
    method: str
    rel_weights: RelativeWeights
    newton_tol: float
    samples: int
    ns_per_sample: float
    speedup_vs_rejection: float
    deviates: int
    trials: int


class CountingRng:
    """Wraps a numpy Generator, counting every uniform deviate drawn."""

    def __init__(self, rng: np.random.Generator):
        self._rng = rng
        self.count = 0

    def random(self, size=None):
        self.count += 1 if size is None else int(np.prod(size))
        return self._rng.random(size)


def _time_interleaved(samplers, n: int) -> list[float]:
    """Time each ``sampler(chunk_size)`` over ``n`` samples, round-robin.

    Chunks from all samplers are interleaved so that drifting machine load
    affects every method equally instead of whichever happened to run during
    a slow window. Returns mean ns per sample for each sampler.
    """
    elapsed = [0] * len(samplers)
    done = 0
    while done < n:
        m = min(CHUNK, n - done)
        for i, sampler in enumerate(samplers):
            t0 = time.perf_counter_ns()
            sampler(m)
            elapsed[i] += time.perf_counter_ns() - t0
        done += m
    return [e / n for e in elapsed]


def run_bench(
    rel_weights: RelativeWeights = RelativeWeights(-3.0, -3.0),
    samples: int = 10_000_000,
    newton_tols=(5.0e-3, 1.0e-4, 1.0e-8),
    seed: int = 0,
) -> list[BenchReport]:
    """Time both samplers on a synthetic unit triangle with the given weights.

    Rejection is timed once; inversion once per Newton tolerance, with chunks
    interleaved across methods. Timing wraps only the tight sampling loops
    (table build and warm-up excluded).
    """
    mesh = mesh_for_weights(rel_weights)
    table = build_table(mesh)
    warmup = min(CHUNK, samples)

    rej_rng = CountingRng(np.random.default_rng(seed))
    trials_box = [0]

    def rej(m):
        _, t = rejection_sample_points(table, mesh, m, rej_rng)
        trials_box[0] += t

    def make_inv(cfg, rng):
        return lambda m: sample_points(table, mesh, m, rng, cfg)

    inv_rngs = [CountingRng(np.random.default_rng(seed)) for _ in newton_tols]
    samplers = [rej] + [
        make_inv(NewtonConfig(tol=tol), rng)
        for tol, rng in zip(newton_tols, inv_rngs)
    ]

    for sampler in samplers:  # warm-up at full chunk size, untimed
        sampler(warmup)
    for rng in [rej_rng, *inv_rngs]:
        rng.count = 0
    trials_box[0] = 0

    ns = _time_interleaved(samplers, samples)

    rej_ns = ns[0]
    reports = [
        BenchReport(
            "rejection", rel_weights, float("nan"), samples, rej_ns, 1.0,
            rej_rng.count, trials_box[0],
        )
    ]
    for tol, rng, inv_ns in zip(newton_tols, inv_rngs, ns[1:]):
        reports.append(
            BenchReport(
                "inversion", rel_weights, tol, samples, inv_ns,
                rej_ns / inv_ns, rng.count, 0,
            )
        )
    return reports


def format_report(reports: list[BenchReport]) -> str:
    lines = [
        f"{'method':<10} {'tol':>10} {'samples':>10} {'ns/sample':>12} "
        f"{'speedup':>9} {'deviates':>12} {'trials':>10}"
    ]
    for r in reports:
        tol = "-" if np.isnan(r.newton_tol) else f"{r.newton_tol:.1e}"
        lines.append(
            f"{r.method:<10} {tol:>10} {r.samples:>10} {r.ns_per_sample:>12.2f} "
            f"{r.speedup_vs_rejection:>9.2f} {r.deviates:>12} {r.trials:>10}"
        )
    return "\n".join(lines)


def write_bench_csv(reports: list[BenchReport], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["method", "phi_u_rel", "phi_v_rel", "newton_tol", "samples",
             "ns_per_sample", "speedup_vs_rejection", "deviates", "trials"]
        )
        for r in reports:
            writer.writerow(
                [r.method, r.rel_weights.phi_u_rel, r.rel_weights.phi_v_rel,
                 r.newton_tol, r.samples, f"{r.ns_per_sample:.3f}",
                 f"{r.speedup_vs_rejection:.4f}", r.deviates, r.trials]
            )
