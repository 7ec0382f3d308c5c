"""Benchmark harness comparing the two Clifford product algorithms.

Each trial draws a random blade pair, runs both algorithms on the same
inputs, cross-checks the results for exact equality and records the wall
time per call.  Three form scenarios are covered: sparse numeric (at least
80% zero entries, dominant diagonal), dense numeric (random rationals
everywhere), and fully symbolic (a named form).  A disagreement aborts the
run with enough detail to reproduce it.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .bform import BilinearForm
from .multivector import Blade
from .product import Algorithm, cmul_chevalley, cmul_rota_stein
from .randgen import random_blade

SCENARIOS = ("sparse_numeric", "dense_numeric", "symbolic")


class CrossCheckError(RuntimeError):
    """The two algorithms disagreed; carries a reproducer."""

    def __init__(self, scenario: str, dim: int, seed: int, a: Blade, b: Blade, form: BilinearForm):
        self.reproducer = {
            "scenario": scenario,
            "dim": dim,
            "seed": seed,
            "left": str(a),
            "right": str(b),
            "form": str(form),
        }
        super().__init__(
            "algorithm cross-check failed: "
            + ", ".join(f"{k}={v}" for k, v in self.reproducer.items())
        )


def _nonzero_int(rng: random.Random, lo: int = -3, hi: int = 3) -> int:
    while True:
        v = rng.randint(lo, hi)
        if v:
            return v


def sparse_numeric_form(rng: random.Random, dim: int) -> BilinearForm:
    """Diagonal-dominant random form with at least 80% zero entries."""
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        rows[i][i] = Fraction(_nonzero_int(rng))
    budget = max(0, dim * dim // 5 - dim)
    cells = [(i, j) for i in range(dim) for j in range(dim) if i != j]
    rng.shuffle(cells)
    for i, j in cells[:budget]:
        rows[i][j] = Fraction(_nonzero_int(rng))
    return BilinearForm.explicit(rows)


def dense_numeric_form(rng: random.Random, dim: int) -> BilinearForm:
    rows = [
        [Fraction(_nonzero_int(rng, -9, 9), rng.randint(1, 3)) for _ in range(dim)]
        for _ in range(dim)
    ]
    return BilinearForm.explicit(rows)


def scenario_form(scenario: str, rng: random.Random, dim: int) -> BilinearForm:
    if scenario == "sparse_numeric":
        return sparse_numeric_form(rng, dim)
    if scenario == "dense_numeric":
        return dense_numeric_form(rng, dim)
    if scenario == "symbolic":
        return BilinearForm.named("K", dim)
    raise ValueError(f"unknown scenario {scenario!r}")


@dataclass
class BenchRow:
    scenario: str
    dim: int
    algorithm: str
    trials: int
    median_s: float
    mean_s: float


@dataclass
class BenchReport:
    seed: int
    rows: list = field(default_factory=list)
    winners: dict = field(default_factory=dict)  # (scenario, dim) -> algorithm value
    trials_checked: int = 0

    def row(self, scenario: str, dim: int, algorithm: Algorithm) -> BenchRow:
        for r in self.rows:
            if (r.scenario, r.dim, r.algorithm) == (scenario, dim, algorithm.value):
                return r
        raise KeyError((scenario, dim, algorithm))


def run_bench(scenarios, dims, trials: int, seed: int = 0) -> BenchReport:
    """Time both algorithms on common random blade pairs, cross-checking."""
    report = BenchReport(seed=seed)
    for scenario in scenarios:
        if scenario not in SCENARIOS:
            raise ValueError(f"unknown scenario {scenario!r}")
        for dim in dims:
            if not (1 <= dim <= 9):
                raise ValueError(f"bench dimension {dim} out of range 1..9")
            rng = random.Random((seed, scenario, dim).__repr__())
            form = scenario_form(scenario, rng, dim)
            times = {Algorithm.CHEVALLEY: [], Algorithm.ROTA_STEIN: []}
            for _ in range(trials):
                a, b = random_blade(rng, dim), random_blade(rng, dim)
                t0 = time.perf_counter()
                out_num = cmul_chevalley(a, b, form)
                t1 = time.perf_counter()
                out_rs = cmul_rota_stein(a, b, form)
                t2 = time.perf_counter()
                if out_num != out_rs:
                    raise CrossCheckError(scenario, dim, seed, a, b, form)
                times[Algorithm.CHEVALLEY].append(t1 - t0)
                times[Algorithm.ROTA_STEIN].append(t2 - t1)
                report.trials_checked += 1
            medians = {}
            for algo, ts in times.items():
                medians[algo] = statistics.median(ts)
                report.rows.append(
                    BenchRow(scenario, dim, algo.value, trials,
                             medians[algo], statistics.fmean(ts))
                )
            winner = min(medians, key=lambda k: medians[k])
            report.winners[(scenario, dim)] = winner.value
    return report


def write_csv(report: BenchReport, path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scenario", "dim", "algorithm", "trials", "median_seconds", "mean_seconds"])
        for r in report.rows:
            w.writerow([r.scenario, r.dim, r.algorithm, r.trials,
                        f"{r.median_s:.9f}", f"{r.mean_s:.9f}"])


def summary_text(report: BenchReport) -> str:
    lines = [
        f"bench seed={report.seed}; {report.trials_checked} trials, all cross-checks passed",
        f"{'scenario':<16}{'dim':>4}{'algorithm':>11}{'median_s':>14}{'mean_s':>14}",
    ]
    for r in report.rows:
        lines.append(
            f"{r.scenario:<16}{r.dim:>4}{r.algorithm:>11}{r.median_s:>14.6f}{r.mean_s:>14.6f}"
        )
    lines.append("winners by median:")
    for (scenario, dim), algo in sorted(report.winners.items()):
        lines.append(f"  {scenario} dim {dim}: {algo}")
    return "\n".join(lines)


def write_plot(report: BenchReport, path: str) -> None:
    """Median time per dimension and algorithm, one panel per scenario."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    scenarios = sorted({r.scenario for r in report.rows})
    fig, axes = plt.subplots(1, len(scenarios), figsize=(5 * len(scenarios), 4), squeeze=False)
    for ax, scenario in zip(axes[0], scenarios):
        for algo, marker in ((Algorithm.CHEVALLEY.value, "o"), (Algorithm.ROTA_STEIN.value, "s")):
            pts = sorted(
                (r.dim, r.median_s)
                for r in report.rows
                if r.scenario == scenario and r.algorithm == algo
            )
            if pts:
                ax.plot([p[0] for p in pts], [p[1] for p in pts], marker=marker, label=algo)
        ax.set_title(scenario)
        ax.set_xlabel("dim")
        ax.set_ylabel("median seconds")
        ax.set_yscale("log")
        ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
