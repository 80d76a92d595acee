"""Builders for the extremal families and the regular gadgets they need.

Fixed labelling: the clique side of a complete split graph sits on the
highest-numbered vertices, and the first regular gadget of a family always
occupies vertices ``0..p-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, FeasibilityError, InputError
from .graph import Graph, graph_from_edges
from .indices import DegreeProfile


@dataclass(frozen=True)
class FamilyParams:
    n: int
    p: int
    k: int
    m: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n - 1:
            raise InputError(f"need 1 <= k <= n-1, got n={self.n}, k={self.k}")
        if self.m is not None and not self.k <= self.m <= self.n - 1:
            raise InputError(f"need k <= m <= n-1, got k={self.k}, m={self.m}")
        if not 0 <= self.p <= self.n:
            raise InputError(f"need 0 <= p <= n, got p={self.p}")


def regular_feasible(p: int, d: int) -> bool:
    if p == 0:
        return d == 0
    return 0 <= d <= p - 1 and p * d % 2 == 0


def circulant_edges(p: int, d: int, offset: int = 0) -> list[tuple[int, int]]:
    """Edges of the circulant d-regular graph on vertices offset..offset+p-1."""
    if not regular_feasible(p, d):
        raise FeasibilityError(f"no {d}-regular graph on {p} vertices")
    steps = list(range(1, d // 2 + 1))
    if d % 2:
        steps.append(p // 2)
    edges = set()
    for v in range(p):
        for s in steps:
            a, b = sorted((v, (v + s) % p))
            edges.add((offset + a, offset + b))
    return sorted(edges)


def regular_graph(p: int, d: int) -> Graph:
    if p < 1:
        raise InputError("regular_graph needs p >= 1")
    return graph_from_edges(p, circulant_edges(p, d))


def complete_split(n: int, k: int) -> Graph:
    """K*_{k,n-k}: a k-clique joined to an independent set of n-k vertices."""
    if not 1 <= k <= n - 1:
        raise InputError(f"complete_split needs 1 <= k <= n-1, got n={n}, k={k}")
    clique = range(n - k, n)
    return graph_from_edges(n, [(u, v) for u in clique for v in range(u)])


def _complete_minus(n: int, removed: list[tuple[int, int]]) -> Graph:
    gone = set(removed)
    return graph_from_edges(
        n, [(u, v) for v in range(n) for u in range(v) if (u, v) not in gone]
    )


def family_gnpk(n: int, p: int, k: int) -> Graph:
    """K_n minus an (n-k-1)-regular graph on the first p vertices."""
    FamilyParams(n, p, k)
    if p == 0:
        return _complete_minus(n, [])
    return _complete_minus(n, circulant_edges(p, n - k - 1))


def family_gnpkm(n: int, p: int, k: int, m: int) -> Graph:
    """K_n minus an (n-k-1)-regular graph on the first p vertices and an
    (n-m-1)-regular graph on the remaining n-p."""
    FamilyParams(n, p, k, m)
    removed = circulant_edges(p, n - k - 1) if p else []
    removed += circulant_edges(n - p, n - m - 1, offset=p) if n - p else []
    return _complete_minus(n, removed)


@dataclass(frozen=True)
class ExtremalProfile:
    """Predicted minimiser profile; ``profile`` is None when some count is
    not an integer (the parity-infeasible cases)."""

    n: int
    k: int
    m: int
    regime: str
    raw_vertex_counts: dict[int, Fraction]
    raw_edge_counts: dict[tuple[int, int], Fraction]
    profile: DegreeProfile | None

    @property
    def parity_feasible(self) -> bool:
        return self.profile is not None


def extremal_profile(n: int, k: int, m: int | None = None) -> ExtremalProfile:
    if m is None:
        m = n - 1
    if not (1 <= k and (2 * k <= n or k <= n - 2)):
        raise InputError(f"extremal_profile needs 1 <= k <= n-2, got n={n}, k={k}")
    if not k <= m <= n - 1:
        raise InputError(f"need k <= m <= n-1, got k={k}, m={m}")
    verts: dict[int, Fraction] = {}
    edges: dict[tuple[int, int], Fraction] = {}

    def put(d: dict, key, val) -> None:
        d[key] = d.get(key, Fraction(0)) + Fraction(val)

    if 2 * k <= n:
        if m < n - k:
            raise DomainError(f"split regime needs m >= n-k, got m={m}")
        regime = "split"
        put(verts, k, n - k)
        put(verts, m, k)
        put(edges, (k, m), (n - k) * k)
        put(edges, (m, m), Fraction(k * (k + m - n), 2))
    else:
        regime = "half"
        put(verts, k, Fraction(n, 2))
        put(verts, m, Fraction(n, 2))
        put(edges, (k, k), Fraction(n * (2 * k - n), 8))
        put(edges, (k, m), Fraction(n * n, 4))
        put(edges, (m, m), Fraction(n * (2 * m - n), 8))
    integral = all(v.denominator == 1 for v in (*verts.values(), *edges.values()))
    profile = None
    if integral:
        profile = DegreeProfile(
            n, {i: int(c) for i, c in verts.items()}, {e: int(c) for e, c in edges.items()}
        )
    return ExtremalProfile(n, k, m, regime, verts, edges, profile)


def gnpk_profile(n: int, p: int, k: int) -> DegreeProfile:
    """Degree profile shared by every member of the (n, p, k) family."""
    FamilyParams(n, p, k)
    missing = p * (n - k - 1)
    if missing % 2:
        raise FeasibilityError(f"no {n - k - 1}-regular graph on {p} vertices")
    return DegreeProfile(
        n,
        {k: p, n - 1: n - p},
        {
            (k, k): p * (p - 1) // 2 - missing // 2,
            (k, n - 1): p * (n - p),
            (n - 1, n - 1): (n - p) * (n - p - 1) // 2,
        },
    )
