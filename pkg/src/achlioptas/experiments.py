"""Batches of independent seeded runs and their summary statistics."""
from __future__ import annotations

import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import ode
from .process import ProcessConfig, Trajectory, run

DEFAULT_THRESHOLD = 0.01
BATCH_CSV_HEADER = "t,mean_isolated,sd_isolated,mean_max,sd_max,ode_i"


def trial_seed(base_seed: int, k: int) -> int:
    """64-bit seed of trial ``k``, a deterministic function of ``(base_seed, k)``."""
    ss = np.random.SeedSequence(base_seed, spawn_key=(k,))
    return int(ss.generate_state(1, np.uint64)[0])


def _snap(traj: Trajectory, grid: np.ndarray):
    # last sample at or before each grid time
    idx = np.searchsorted(traj.t, grid + 1e-12, side="right") - 1
    return traj.isolated_fraction[idx], traj.max_fraction[idx]


def _run_one(args):
    config, strategy = args
    return run(config, strategy)


@dataclass
class BatchResult:
    strategy: str
    n: int
    trials: int
    base_seed: int
    t_max: float
    t: np.ndarray
    isolated: np.ndarray     # shape (trials, len(t))
    max_fraction: np.ndarray
    ode_i: np.ndarray

    @property
    def mean_isolated(self):
        return self.isolated.mean(axis=0)

    @property
    def sd_isolated(self):
        return _sd(self.isolated)

    @property
    def mean_max(self):
        return self.max_fraction.mean(axis=0)

    @property
    def sd_max(self):
        return _sd(self.max_fraction)

    @property
    def max_deviation(self) -> float:
        """Largest gap between the mean isolated fraction and the ODE on the grid."""
        return float(np.max(np.abs(self.mean_isolated - self.ode_i)))

    def emergence_times(self, threshold: float = DEFAULT_THRESHOLD) -> list[float | None]:
        if not 0 < threshold < 1:
            raise ValueError("threshold must lie in (0, 1)")
        out = []
        for row in self.max_fraction:
            hit = np.flatnonzero(row >= threshold)
            out.append(float(self.t[hit[0]]) if hit.size else None)
        return out

    def at(self, t: float) -> int:
        """Grid index of the last grid point not after ``t``."""
        return int(np.searchsorted(self.t, t + 1e-12, side="right")) - 1

    def summary(self, threshold: float = DEFAULT_THRESHOLD, report_at: float | None = None) -> dict:
        d = {
            "strategy": self.strategy,
            "n": self.n,
            "trials": self.trials,
            "base_seed": self.base_seed,
            "t_max": self.t_max,
            "threshold": threshold,
            "emergence_times": self.emergence_times(threshold),
            "emergence": emergence_summary(self, threshold)._asdict(),
            "max_deviation": self.max_deviation,
        }
        if report_at is not None:
            k = self.at(report_at)
            d["report_at"] = float(self.t[k])
            d["mean_isolated_at_report"] = float(self.mean_isolated[k])
            d["sd_isolated_at_report"] = float(self.sd_isolated[k])
            d["ode_i_at_report"] = float(self.ode_i[k])
        return d

    def to_json(self, path=None, **kw) -> str:
        text = json.dumps(self.summary(**kw), indent=2, sort_keys=True) + "\n"
        if path is not None:
            with open(path, "w") as fh:
                fh.write(text)
        return text

    def to_csv(self, path=None) -> str:
        buf = io.StringIO()
        buf.write(BATCH_CSV_HEADER + "\n")
        cols = (self.t, self.mean_isolated, self.sd_isolated, self.mean_max, self.sd_max, self.ode_i)
        for row in zip(*cols):
            buf.write(",".join(f"{x:.10g}" for x in row) + "\n")
        text = buf.getvalue()
        if path is not None:
            with open(path, "w") as fh:
                fh.write(text)
        return text


def _sd(a):
    if a.shape[0] < 2:
        return np.zeros(a.shape[1])
    return a.std(axis=0, ddof=1)


def run_batch(template: ProcessConfig, strategy, trials: int, base_seed: int = 0,
              workers: int = 1, solution: ode.OdeSolution | None = None) -> BatchResult:
    """Run ``trials`` independent copies of ``template`` under ``strategy``.

    Trial ``k`` uses ``trial_seed(base_seed, k)``; the template's own seed is
    ignored. Output does not depend on ``workers``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    configs = [replace(template, seed=trial_seed(base_seed, k)) for k in range(trials)]
    jobs = [(c, strategy) for c in configs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trajs = list(pool.map(_run_one, jobs))
    else:
        trajs = [_run_one(j) for j in jobs]

    grid = trajs[0].t
    for tr in trajs[1:]:
        # coarsest grid wins
        if len(tr.t) < len(grid):
            grid = tr.t
    snapped = [_snap(tr, grid) for tr in trajs]
    isolated = np.array([s[0] for s in snapped])
    maxf = np.array([s[1] for s in snapped])
    sol = solution if solution is not None else ode.solve(ode.DEFAULT_STEP, 1.0)
    ode_i = np.array([sol.eval(float(t)) for t in grid])
    return BatchResult(getattr(strategy, "name", repr(strategy)), template.n, trials, base_seed,
                       template.t_max, np.array(grid), isolated, maxf, ode_i)


class EmergenceSummary(NamedTuple):
    min: float | None
    median: float | None
    max: float | None
    censored: int


def emergence_summary(batch: BatchResult, threshold: float = DEFAULT_THRESHOLD) -> EmergenceSummary:
    """Order statistics of emergence times; trials that never reach ``threshold`` are censored."""
    if batch.trials < 1 or batch.max_fraction.shape[0] == 0:
        raise ValueError("empty batch")
    times = [t for t in batch.emergence_times(threshold) if t is not None]
    censored = batch.trials - len(times)
    if not times:
        return EmergenceSummary(None, None, None, censored)
    return EmergenceSummary(min(times), float(np.median(times)), max(times), censored)
