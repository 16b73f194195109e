"""Isolated-vertex drift under MinP1 and its fixed-step RK4 solution.

Time is in units of ``n`` rounds; ``i(t)`` is the fraction of isolated
vertices, with ``i'(t) = drift(i(t))`` and ``i(0) = 1``.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

DEFAULT_STEP = 1e-4


def _check_unit(x):
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")


def drift(x: float) -> float:
    """Expected one-round change of the isolated fraction at level ``x``."""
    _check_unit(x)
    return _quartic(x)


def _quartic(x):
    return x * (-4.0 + x * (4.0 + x * (-4.0 + 2.0 * x)))


# (probability of the round type, change in isolated count) for each round
# type in which MinP1 changes the isolated count. x is the isolated fraction.
CASES = (
    (lambda x: x * x, -2),                            # (1, 1, *, *)
    (lambda x: x * (1 - x) * (1 - x * x), -1),        # (1, >1, not both 1)
    (lambda x: x * (1 - x) * (1 - x * x), -1),        # (>1, 1, not both 1)
    (lambda x: (1 - x * x) * x * x, -2),              # (not both 1, 1, 1)
    (lambda x: x * (1 - x) ** 3, -1),                 # (>1, >1, 1, >1)
    (lambda x: x * (1 - x) ** 3, -1),                 # (>1, >1, >1, 1)
)


def drift_from_cases(x: float) -> float:
    """The drift rebuilt term by term from the six round types."""
    _check_unit(x)
    return sum(p(x) * delta for p, delta in CASES)


@dataclass(frozen=True)
class OdeSolution:
    t: np.ndarray
    i: np.ndarray
    h: float
    method: str = "rk4"

    @property
    def t_end(self) -> float:
        return float(self.t[-1])

    def eval(self, t: float) -> float:
        """Linear interpolation on the solution grid."""
        if not 0.0 <= t <= self.t_end:
            raise ValueError(f"t={t} outside solved range [0, {self.t_end}]")
        k = int(np.searchsorted(self.t, t, side="right")) - 1
        if k >= len(self.t) - 1 or self.t[k] == t:
            return float(self.i[min(k, len(self.t) - 1)])
        t0, t1 = self.t[k], self.t[k + 1]
        w = (t - t0) / (t1 - t0)
        return float((1 - w) * self.i[k] + w * self.i[k + 1])

    __call__ = eval

    def to_csv(self, path=None, stride: int = 1) -> str:
        """``t,i`` rows every ``stride`` grid points; the last point is always kept."""
        if stride < 1:
            raise ValueError("stride must be >= 1")
        idx = list(range(0, len(self.t), stride))
        if idx[-1] != len(self.t) - 1:
            idx.append(len(self.t) - 1)
        buf = io.StringIO()
        buf.write("t,i\n")
        for k in idx:
            buf.write(f"{self.t[k]:.10g},{self.i[k]:.10g}\n")
        text = buf.getvalue()
        if path is not None:
            with open(path, "w") as fh:
                fh.write(text)
        return text


def solve(h: float = DEFAULT_STEP, t_end: float = 1.0) -> OdeSolution:
    """Classic RK4 with fixed step ``h``; the final step is cut to land on ``t_end``."""
    if not 0 < h <= 0.01:
        raise ValueError(f"step must lie in (0, 0.01], got {h}")
    if not 0 < t_end <= 1:
        raise ValueError(f"t_end must lie in (0, 1], got {t_end}")
    n_full = int(math.floor(t_end / h + 1e-9))
    ts = [round(k * h, 12) for k in range(n_full + 1)]
    if t_end - ts[-1] > 1e-12:
        ts.append(t_end)
    else:
        ts[-1] = t_end
    f = _quartic
    y = 1.0
    ys = [y]
    for k in range(len(ts) - 1):
        dt = ts[k + 1] - ts[k]
        k1 = f(y)
        k2 = f(y + 0.5 * dt * k1)
        k3 = f(y + 0.5 * dt * k2)
        k4 = f(y + dt * k3)
        y += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        ys.append(y)
    return OdeSolution(np.array(ts), np.array(ys), h)


def eval(sol: OdeSolution, t: float) -> float:  # noqa: A001
    return sol.eval(t)
