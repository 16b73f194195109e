"""Edge-density bookkeeping behind the 0.9455n bound.

While no component is large, every small component carries at most
``(1 + eps)`` edges per vertex, so the edges of the graph fit on the
non-isolated vertices: ``(1 + eps) * (1 - i(t)) >= t``. Once the isolated
fraction stays too high for that to hold, a giant must already exist.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from .components import ComponentForest
from .ode import OdeSolution


def delta_of(epsilon: float, t: float) -> float:
    """Size scale ``2 eps (4 t e)^(-1 - 1/eps)`` below which dense sets are unlikely."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if not 0 < t <= 1:
        raise ValueError("t must lie in (0, 1]")
    return 2.0 * epsilon * (4.0 * t * math.e) ** (-1.0 - 1.0 / epsilon)


def log10_delta_of(epsilon: float, t: float) -> float:
    """``log10(delta_of(epsilon, t))``; finite even where ``delta_of`` underflows."""
    delta_of(epsilon, t)
    return math.log10(2.0 * epsilon) - (1.0 + 1.0 / epsilon) * math.log10(4.0 * t * math.e)


def incapacity_lhs(i_t: float, epsilon: float) -> float:
    return (1.0 + epsilon) * (1.0 - i_t)


def incapacity_check(i_t: float, t: float, epsilon: float) -> bool:
    """True iff ``(1 + eps)(1 - i_t) >= t``."""
    if not 0 <= i_t <= 1:
        raise ValueError("i_t must lie in [0, 1]")
    if not 0 < t <= 1:
        raise ValueError("t must lie in (0, 1]")
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    return incapacity_lhs(i_t, epsilon) >= t


class Violation(NamedTuple):
    root: int
    size: int
    edges: int


def component_density_audit(forest: ComponentForest, edge_counts: dict[int, int],
                            epsilon: float, delta: float) -> list[Violation]:
    """Small components (fewer than ``delta * n`` vertices) holding more than
    ``(1 + eps) * size`` edges.

    ``edge_counts`` maps component roots to internal edge counts, as returned
    by :meth:`ComponentForest.component_edge_counts`. Components missing from
    the mapping count as edgeless.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    # delta may underflow to 0 for tiny epsilon: then no component is small
    if not delta >= 0:
        raise ValueError("delta must be non-negative")
    parent, size = forest.parent, forest.size
    limit = delta * forest.n
    out = []
    for root, m in sorted(edge_counts.items()):
        if not 0 <= root < forest.n or parent[root] != root:
            raise ValueError(f"{root} is not a component root")
        if m < 0:
            raise ValueError(f"negative edge count for component {root}")
        s = size[root]
        if s < limit and m > (1.0 + epsilon) * s:
            out.append(Violation(root, s, m))
    return out


def critical_time(sol: OdeSolution, epsilon: float) -> float | None:
    """First grid time where ``(1 + eps)(1 - i(t)) < t``, or None."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    bad = np.flatnonzero((1.0 + epsilon) * (1.0 - sol.i) < sol.t)
    if bad.size == 0:
        return None
    return float(sol.t[bad[0]])


@dataclass
class DensityReport:
    epsilon: float
    t: float
    delta: float
    log10_delta: float
    i_t: float
    inequality_lhs: float
    inequality_holds: bool
    redundant_fraction: float | None = None
    max_fraction: float | None = None
    t_effective: float | None = None
    critical_time: float | None = None
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violations"] = [dict(v._asdict()) for v in self.violations]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DensityReport":
        d = dict(d)
        d["violations"] = [Violation(**v) for v in d.get("violations", [])]
        return cls(**d)


def density_report(epsilon: float, t: float, i_t: float, **extra) -> DensityReport:
    lhs = incapacity_lhs(i_t, epsilon)
    return DensityReport(epsilon=epsilon, t=t, delta=delta_of(epsilon, t),
                         log10_delta=log10_delta_of(epsilon, t), i_t=i_t,
                         inequality_lhs=lhs, inequality_holds=lhs >= t, **extra)


def audit_process(proc, epsilon: float) -> DensityReport:
    """Density report for the current state of an ``AchlioptasProcess``."""
    f = proc.forest
    t = proc.t
    if t <= 0:
        raise ValueError("nothing to audit before the first round")
    delta = delta_of(epsilon, t)
    violations = component_density_audit(f, f.component_edge_counts(), epsilon, delta)
    return density_report(epsilon, t, f.isolated_count / f.n,
                          redundant_fraction=proc.redundant / f.n,
                          max_fraction=f.max_size / f.n,
                          t_effective=proc.merged_edges / f.n,
                          violations=violations)


def reports_to_json(reports, path=None) -> str:
    text = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def reports_from_json(text: str) -> list[DensityReport]:
    return [DensityReport.from_dict(d) for d in json.loads(text)]
