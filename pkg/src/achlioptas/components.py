"""Union-find forest with the component statistics the process needs.

Besides the partition itself the forest keeps, per root, the component size
and the number of edges added inside the component (redundant edges
included), plus running totals for isolated vertices and the largest
component. Edges themselves are never stored.
"""
from __future__ import annotations

from typing import NamedTuple


class EdgeOutcome(NamedTuple):
    """Result of :meth:`ComponentForest.add_edge`.

    ``merged`` is False for a redundant edge; ``size`` is then the size of the
    (unchanged) component holding both endpoints.
    """

    merged: bool
    size: int

    @property
    def redundant(self) -> bool:
        return not self.merged


class ComponentForest:
    """Disjoint sets over ``range(n)`` with union by size and path halving."""

    __slots__ = ("n", "parent", "size", "edges", "isolated_count", "max_size", "n_components")

    def __init__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        self.n = n
        self.parent = list(range(n))
        # size/edges are only meaningful at roots
        self.size = [1] * n
        self.edges = [0] * n
        self.isolated_count = n
        self.max_size = 1
        self.n_components = n

    def __repr__(self):
        return (f"ComponentForest(n={self.n}, components={self.n_components}, "
                f"isolated={self.isolated_count}, max_size={self.max_size})")

    def _check(self, v):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")

    def find(self, v: int) -> int:
        self._check(v)
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def component_size(self, v: int) -> int:
        return self.size[self.find(v)]

    def same_component(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def add_edge(self, u: int, v: int) -> EdgeOutcome:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) rejected")
        ru = self.find(u)
        rv = self.find(v)
        size = self.size
        if ru == rv:
            self.edges[ru] += 1
            return EdgeOutcome(False, size[ru])
        su, sv = size[ru], size[rv]
        if su < sv:
            ru, rv = rv, ru
        self.parent[rv] = ru
        new = su + sv
        size[ru] = new
        self.edges[ru] += self.edges[rv] + 1
        self.isolated_count -= (su == 1) + (sv == 1)
        self.n_components -= 1
        if new > self.max_size:
            self.max_size = new
        return EdgeOutcome(True, new)

    @property
    def isolated_fraction(self) -> float:
        return self.isolated_count / self.n

    @property
    def max_fraction(self) -> float:
        return self.max_size / self.n

    def roots(self) -> list[int]:
        return [v for v in range(self.n) if self.parent[v] == v]

    def component_sizes(self) -> dict[int, int]:
        """Map root -> component size, by full scan."""
        return {r: self.size[r] for r in self.roots()}

    def component_edge_counts(self) -> dict[int, int]:
        """Map root -> number of edges added inside that component."""
        return {r: self.edges[r] for r in self.roots()}


def new_forest(n: int) -> ComponentForest:
    return ComponentForest(n)
