"""Degree-based indices: R', R, R_alpha, and the degree profile."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .graph import Graph, degree_sequence


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex counts per degree and edge counts per unordered degree pair.

    ``edge_counts`` is keyed by ``(i, j)`` with ``i <= j``. Zero entries are
    dropped on construction so that equal profiles compare equal.
    """

    n: int
    vertex_counts: Mapping[int, int]
    edge_counts: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertex_counts", {i: c for i, c in sorted(self.vertex_counts.items()) if c}
        )
        edges = {}
        for (i, j), c in sorted(self.edge_counts.items()):
            key = (i, j) if i <= j else (j, i)
            edges[key] = edges.get(key, 0) + c
        object.__setattr__(self, "edge_counts", {k: c for k, c in edges.items() if c})

    @property
    def k_min(self) -> int | None:
        return min(self.vertex_counts) if self.vertex_counts else None

    def count(self, i: int) -> int:
        return self.vertex_counts.get(i, 0)

    def x(self, i: int, j: int) -> int:
        return self.edge_counts.get((min(i, j), max(i, j)), 0)

    def degrees(self) -> list[int]:
        seen = set(self.vertex_counts)
        for i, j in self.edge_counts:
            seen.update((i, j))
        return sorted(seen)


def degree_profile(g: Graph) -> DegreeProfile:
    deg = degree_sequence(g)
    edges = Counter()
    for u, v in g.edges():
        a, b = sorted((deg[u], deg[v]))
        edges[a, b] += 1
    return DegreeProfile(g.order, Counter(deg), edges)


def variation_randic(g: Graph) -> Fraction:
    """R'(g): sum over edges of 1 / max(d(u), d(v)), exactly."""
    deg = degree_sequence(g)
    by_max = Counter(max(deg[u], deg[v]) for u, v in g.edges())
    return sum((Fraction(c, d) for d, c in by_max.items()), Fraction(0))


def variation_from_profile(profile: DegreeProfile) -> Fraction:
    return sum((Fraction(c, j) for (_, j), c in profile.edge_counts.items()), Fraction(0))


def randic(g: Graph) -> float:
    deg = degree_sequence(g)
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges())


def general_randic(g: Graph, alpha: float) -> float:
    deg = degree_sequence(g)
    return math.fsum(float(deg[u] * deg[v]) ** alpha for u, v in g.edges())
