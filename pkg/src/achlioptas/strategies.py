"""Edge-choice rules.

A strategy only ever sees the four component sizes ``(a, b, c, d)`` of a
round: ``a, b`` for the endpoints of the first candidate edge and ``c, d``
for the second. Every strategy is an immutable, picklable value whose
``decide`` method is a pure function of those sizes.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple


class Choice(enum.IntEnum):
    FIRST = 0
    SECOND = 1


class RoundSizes(NamedTuple):
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class BoundedSizeStrategy:
    """Weighted bounded-size rule with cutoff ``K``.

    ``weights`` has ``K + 1`` entries: the weights of sizes ``1..K`` followed
    by the common weight of every size above ``K``. The first edge is taken
    when its weight sum does not exceed the second's.
    """

    K: int
    weights: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if len(self.weights) != self.K + 1:
            raise ValueError(f"need K+1={self.K + 1} weights, got {len(self.weights)}")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.name:
            ws = ",".join(map(str, self.weights))
            object.__setattr__(self, "name", f"bounded:K={self.K};w={ws}")

    def weight(self, s: int) -> int:
        return self.weights[min(s, self.K + 1) - 1]

    def decide(self, a, b, c, d):
        w = self.weight
        if w(a) + w(b) <= w(c) + w(d):
            return Choice.FIRST
        return Choice.SECOND


MINP1 = BoundedSizeStrategy(1, (1, 2), name="minp1")


@dataclass(frozen=True)
class FirstEdge:
    """Always keeps the first edge: the plain Erdos-Renyi process."""

    name: str = "first-edge"

    def decide(self, a, b, c, d):
        return Choice.FIRST


@dataclass(frozen=True)
class BohmanFrieze:
    """Keep the first edge iff it joins two isolated vertices."""

    name: str = "bohman-frieze"

    def decide(self, a, b, c, d):
        if a == 1 and b == 1:
            return Choice.FIRST
        return Choice.SECOND


FIRST_EDGE = FirstEdge()
BOHMAN_FRIEZE = BohmanFrieze()

SHIPPED = (
    "minp1",
    "first-edge",
    "bohman-frieze",
    "bounded:K=2;w=1,2,3",
    "bounded:K=2;w=1,3,2",
)


def decide_bounded(strategy: BoundedSizeStrategy, r: RoundSizes) -> Choice:
    return strategy.decide(*r)


def decide_first_edge(r: RoundSizes) -> Choice:
    return FIRST_EDGE.decide(*r)


def decide_bohman_frieze(r: RoundSizes) -> Choice:
    return BOHMAN_FRIEZE.decide(*r)


_BOUNDED_RE = re.compile(r"^bounded:K=(\d+);w=([\d,\s]+)$")


def parse_strategy(spec: str):
    """Build a strategy from its name string.

    Accepted forms: ``minp1``, ``first-edge``, ``bohman-frieze`` and
    ``bounded:K=<k>;w=<w1,...,wK,wBig>``.
    """
    spec = spec.strip()
    if spec == "minp1":
        return MINP1
    if spec == "first-edge":
        return FIRST_EDGE
    if spec == "bohman-frieze":
        return BOHMAN_FRIEZE
    m = _BOUNDED_RE.match(spec)
    if m:
        K = int(m.group(1))
        weights = tuple(int(x) for x in m.group(2).split(","))
        return BoundedSizeStrategy(K, weights)
    raise ValueError(f"unknown strategy {spec!r}")
