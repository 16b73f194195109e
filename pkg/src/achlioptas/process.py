"""The two-choice random graph process.

Each round draws two candidate edges independently, hands the four endpoint
component sizes to a strategy and adds the chosen edge to a
:class:`~achlioptas.components.ComponentForest`. Time is measured in units
of ``n`` rounds.
"""
from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .components import ComponentForest
from .strategies import Choice, RoundSizes

MAX_RETRIES = 10_000
CSV_HEADER = ("t", "isolated_fraction", "max_fraction", "redundant_added", "steps")


class SamplingMode(str, enum.Enum):
    UNIFORM_PAIR = "uniform-pair"
    NON_EDGE = "non-edge"


class SamplingError(RuntimeError):
    pass


def steps_at(t: float, n: int) -> int:
    """Number of rounds ``floor(t * n)``, tolerant of float noise."""
    return int(math.floor(t * n + 1e-9))


@dataclass(frozen=True)
class ProcessConfig:
    n: int
    t_max: float = 1.0
    sampling_mode: SamplingMode = SamplingMode.UNIFORM_PAIR
    seed: int = 0
    sample_interval: float = 0.001
    # extra times (units of n) at which a sample is always recorded
    marks: tuple[float, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if not 0 < self.t_max <= 1:
            raise ValueError("t_max must lie in (0, 1]")
        if not self.sample_interval > 0:
            raise ValueError("sample_interval must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "sampling_mode", SamplingMode(self.sampling_mode))
        object.__setattr__(self, "marks", tuple(float(m) for m in self.marks))
        if any(not 0 <= m <= self.t_max for m in self.marks):
            raise ValueError("marks must lie in [0, t_max]")

    @property
    def total_steps(self) -> int:
        return steps_at(self.t_max, self.n)

    def sample_steps(self) -> list[int]:
        """Step indices at which the trajectory is recorded, starting at 0."""
        total = self.total_steps
        stride = max(1, math.ceil(self.sample_interval * self.n - 1e-9))
        recorded = set(range(0, total + 1, stride))
        recorded.add(total)
        recorded.update(steps_at(m, self.n) for m in self.marks)
        return sorted(recorded)


class PairSampler:
    """Uniform unordered pairs of distinct vertices, drawn in blocks.

    ``v`` is drawn from ``n - 1`` values and shifted past ``u``, which gives
    the same law as redrawing self-loops without consuming extra variates.
    """

    def __init__(self, n: int, rng: np.random.Generator, block: int = 1 << 15):
        if n < 2:
            raise ValueError("need at least two vertices")
        self.n = n
        self.rng = rng
        self.block = block
        self._u: list[int] = []
        self._v: list[int] = []
        self._pos = 0

    @classmethod
    def from_seed(cls, n: int, seed: int) -> "PairSampler":
        return cls(n, np.random.Generator(np.random.PCG64(seed)))

    def _refill(self):
        u = self.rng.integers(0, self.n, self.block)
        v = self.rng.integers(0, self.n - 1, self.block)
        v += v >= u
        self._u = u.tolist()
        self._v = v.tolist()
        self._pos = 0

    def pair(self) -> tuple[int, int]:
        if self._pos >= len(self._u):
            self._refill()
        i = self._pos
        self._pos = i + 1
        return self._u[i], self._v[i]


class Round(NamedTuple):
    e1: tuple[int, int]
    e2: tuple[int, int]
    sizes: RoundSizes


class StepOutcome(NamedTuple):
    choice: Choice
    edge_added: tuple[int, int]
    was_redundant: bool


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


def _draw_edge(sampler, mode, edges):
    if mode is SamplingMode.UNIFORM_PAIR:
        return sampler.pair()
    if edges is None:
        raise ValueError("non-edge sampling needs the set of present edges")
    for _ in range(MAX_RETRIES):
        u, v = sampler.pair()
        if _edge_key(u, v) not in edges:
            return u, v
    raise SamplingError(f"no non-edge found in {MAX_RETRIES} draws")


def sample_round(forest: ComponentForest, sampler: PairSampler,
                 mode: SamplingMode = SamplingMode.UNIFORM_PAIR, edges: set | None = None) -> Round:
    """Draw two candidate edges independently and read off their component sizes.

    Under ``NON_EDGE`` each candidate is redrawn while it is already present in
    ``edges``; the two candidates may coincide.
    """
    if forest.n < 2:
        raise ValueError("forest needs at least two vertices")
    mode = SamplingMode(mode)
    u1, v1 = _draw_edge(sampler, mode, edges)
    u2, v2 = _draw_edge(sampler, mode, edges)
    size = forest.component_size
    return Round((u1, v1), (u2, v2), RoundSizes(size(u1), size(v1), size(u2), size(v2)))


def step(forest: ComponentForest, strategy, sampler: PairSampler,
         mode: SamplingMode = SamplingMode.UNIFORM_PAIR, edges: set | None = None) -> StepOutcome:
    rnd = sample_round(forest, sampler, mode, edges)
    choice = strategy.decide(*rnd.sizes)
    edge = rnd.e1 if choice == Choice.FIRST else rnd.e2
    outcome = forest.add_edge(*edge)
    if edges is not None:
        edges.add(_edge_key(*edge))
    return StepOutcome(choice, edge, not outcome.merged)


class AchlioptasProcess:
    """A single run that can be advanced and inspected between rounds."""

    def __init__(self, config: ProcessConfig, strategy):
        self.config = config
        self.strategy = strategy
        self.forest = ComponentForest(config.n)
        self.sampler = PairSampler.from_seed(config.n, config.seed)
        self.mode = config.sampling_mode
        self.edges = set() if self.mode is SamplingMode.NON_EDGE else None
        self.steps = 0
        self.redundant = 0

    @property
    def t(self) -> float:
        return self.steps / self.config.n

    @property
    def merged_edges(self) -> int:
        return self.steps - self.redundant

    def advance(self, k: int):
        """Play ``k`` more rounds."""
        if self.edges is not None:
            for _ in range(k):
                if step(self.forest, self.strategy, self.sampler, self.mode, self.edges).was_redundant:
                    self.redundant += 1
            self.steps += k
            return
        # uniform-pair hot loop; equivalent to calling step() k times
        forest = self.forest
        find = forest.find
        size = forest.size
        add_edge = forest.add_edge
        pair = self.sampler.pair
        decide = self.strategy.decide
        first = Choice.FIRST
        redundant = 0
        for _ in range(k):
            u1, v1 = pair()
            u2, v2 = pair()
            if decide(size[find(u1)], size[find(v1)], size[find(u2)], size[find(v2)]) == first:
                merged = add_edge(u1, v1)[0]
            else:
                merged = add_edge(u2, v2)[0]
            if not merged:
                redundant += 1
        self.redundant += redundant
        self.steps += k

    def advance_to(self, t: float):
        target = steps_at(t, self.config.n)
        if target < self.steps:
            raise ValueError(f"cannot rewind from step {self.steps} to {target}")
        self.advance(target - self.steps)

    def snapshot(self) -> tuple[float, float, float, int, int]:
        f = self.forest
        return (self.steps / f.n, f.isolated_count / f.n, f.max_size / f.n, self.redundant, self.steps)


@dataclass
class Trajectory:
    t: np.ndarray
    isolated_fraction: np.ndarray
    max_fraction: np.ndarray
    redundant_added: np.ndarray
    steps: np.ndarray
    n: int | None = field(default=None, compare=False)

    @classmethod
    def from_rows(cls, rows, n=None) -> "Trajectory":
        cols = list(zip(*rows)) if rows else [(), (), (), (), ()]
        return cls(np.asarray(cols[0], dtype=float), np.asarray(cols[1], dtype=float),
                   np.asarray(cols[2], dtype=float), np.asarray(cols[3], dtype=np.int64),
                   np.asarray(cols[4], dtype=np.int64), n)

    def __len__(self):
        return len(self.t)

    def __eq__(self, other):
        if not isinstance(other, Trajectory):
            return NotImplemented
        return all(np.array_equal(getattr(self, k), getattr(other, k)) for k in CSV_HEADER)

    def rows(self):
        for i in range(len(self)):
            yield (float(self.t[i]), float(self.isolated_fraction[i]), float(self.max_fraction[i]),
                   int(self.redundant_added[i]), int(self.steps[i]))

    @property
    def final(self):
        return (float(self.t[-1]), float(self.isolated_fraction[-1]), float(self.max_fraction[-1]),
                int(self.redundant_added[-1]), int(self.steps[-1]))

    def to_csv(self, path=None) -> str:
        """Serialise to CSV (10 significant digits); write to ``path`` if given."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for t, iso, mx, red, st in self.rows():
            w.writerow((f"{t:.10g}", f"{iso:.10g}", f"{mx:.10g}", red, st))
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", newline="") as fh:
                fh.write(text)
        return text

    @classmethod
    def from_csv(cls, source) -> "Trajectory":
        """Parse CSV text or a path written by :meth:`to_csv`."""
        if isinstance(source, str) and source.startswith(CSV_HEADER[0] + ","):
            text = source
        else:
            with open(source, newline="") as fh:
                text = fh.read()
        reader = csv.reader(io.StringIO(text))
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected trajectory header {header}")
        rows = [(float(r[0]), float(r[1]), float(r[2]), int(r[3]), int(r[4])) for r in reader]
        return cls.from_rows(rows)


def run(config: ProcessConfig, strategy) -> Trajectory:
    """Play ``floor(t_max * n)`` rounds, recording samples along the way."""
    proc = AchlioptasProcess(config, strategy)
    rows = []
    for s in config.sample_steps():
        proc.advance(s - proc.steps)
        rows.append(proc.snapshot())
    return Trajectory.from_rows(rows, n=config.n)


def emergence_time(traj: Trajectory, delta: float) -> float | None:
    """First recorded time at which the largest component holds ``delta * n`` vertices."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    hit = np.flatnonzero(traj.max_fraction >= delta)
    if hit.size == 0:
        return None
    return float(traj.t[hit[0]])
