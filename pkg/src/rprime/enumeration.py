"""Exhaustive, isomorph-free search over degree-constrained graph classes.

Graphs with minimum degree >= k are exactly the complements of graphs with
maximum degree <= n-1-k, and a maximum-degree cap survives vertex deletion.
So the search grows complements one vertex at a time: every canonical graph
on v vertices is extended by a new vertex joined to each admissible
neighbour set, children are canonicalised, and duplicates collapse. Each
level is sharded over workers by parent index; shards are merged as sets and
sorted, so the output never depends on the worker count.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from .bounds import BoundResult, bound_theorem1, bound_theorem2, conjecture_p, conjectured_bound
from .canon import canonical_adj, canonical_graph6
from .constructions import gnpk_profile
from .errors import DomainError, FeasibilityError, InputError
from .graph import Graph, from_graph6, is_connected
from .indices import degree_profile, variation_randic

log = logging.getLogger(__name__)

WORKERS_ENV = "RPRIME_WORKERS"
MAX_ORDER = 10


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k_min: int
    m_max: int | None = None
    connected_only: bool = True
    exact_min_degree: bool = False
    budget: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise InputError(f"n must lie in 1..{MAX_ORDER}, got {self.n}")
        if not 0 <= self.k_min <= self.n - 1:
            raise InputError(f"need 0 <= k_min <= n-1, got {self.k_min}")
        if self.m_max is not None and not self.k_min <= self.m_max <= self.n - 1:
            raise InputError(f"need k_min <= m_max <= n-1, got {self.m_max}")

    def admits(self, g: Graph) -> bool:
        degs = [row.bit_count() for row in g.adj]
        lo = min(degs)
        if lo < self.k_min or (self.exact_min_degree and lo != self.k_min):
            return False
        if self.m_max is not None and max(degs) > self.m_max:
            return False
        return not self.connected_only or is_connected(g)


@dataclass
class ClassResult:
    spec: SearchSpec
    graphs: list[Graph]
    partial: bool
    explored: int

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


def _children_count(parent: tuple[int, ...], cap: int) -> int:
    free = sum(1 for row in parent if row.bit_count() < cap)
    return sum(comb(free, s) for s in range(min(cap, free) + 1))


def _expand(job: tuple[list[tuple[int, ...]], int]) -> set[tuple[int, ...]]:
    parents, cap = job
    out = set()
    for parent in parents:
        v = len(parent)
        free = [u for u, row in enumerate(parent) if row.bit_count() < cap]
        for size in range(min(cap, len(free)) + 1):
            for nbrs in combinations(free, size):
                rows = list(parent)
                new = 0
                for u in nbrs:
                    rows[u] |= 1 << v
                    new |= 1 << u
                rows.append(new)
                out.add(canonical_adj(tuple(rows)))
    return out


def _grow(parents: list, cap: int, workers: int, pool) -> list[tuple[int, ...]]:
    if pool is None or len(parents) < 2:
        merged = _expand((parents, cap))
    else:
        shards = [(parents[w::workers], cap) for w in range(workers)]
        merged = set()
        for part in pool.map(_expand, shards):
            merged |= part
    return sorted(merged)


def enumerate_class(spec: SearchSpec, workers: int = 1) -> ClassResult:
    """One canonical representative per isomorphism class admitted by spec,
    sorted by graph6 string."""
    cap = spec.n - 1 - spec.k_min
    level: list[tuple[int, ...]] = [(0,)]
    explored = 1
    partial = False
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for _ in range(1, spec.n):
            if spec.budget is not None:
                kept = []
                for parent in level:
                    cost = _children_count(parent, cap)
                    if explored + cost > spec.budget:
                        partial = True
                        break
                    explored += cost
                    kept.append(parent)
                level = kept
            else:
                explored += sum(_children_count(p, cap) for p in level)
            level = _grow(level, cap, workers, pool)
            if partial:
                log.warning("budget %s exhausted at %d vertices", spec.budget, len(level[0]) if level else 0)
                break
    finally:
        if pool is not None:
            pool.shutdown()
    found = {}
    if not partial or (level and len(level[0]) == spec.n):
        for rows in level:
            if len(rows) != spec.n:
                continue
            g = Graph(spec.n, rows).complement()
            if spec.admits(g):
                s = canonical_graph6(g)
                found[s] = g
    graphs = [from_graph6(s) for s in sorted(found)]
    for g in graphs:
        assert spec.admits(g), g
    return ClassResult(spec, graphs, partial, explored)


def _applicable_bound(spec: SearchSpec) -> BoundResult | None:
    try:
        if spec.m_max is None:
            return bound_theorem1(spec.n, spec.k_min)
        return bound_theorem2(spec.n, spec.k_min, spec.m_max)
    except (InputError, DomainError):
        return None


@dataclass
class SearchReport:
    spec: SearchSpec
    minimum: Fraction | None
    minimizers: list[str]
    class_size: int
    bound: Fraction | None
    partial: bool
    explored: int
    elapsed: float = field(default=0.0, compare=False)
    values: dict[str, Fraction] = field(default_factory=dict, repr=False, compare=False)

    @property
    def empty(self) -> bool:
        return self.class_size == 0

    @property
    def equal(self) -> bool | None:
        if self.bound is None or self.minimum is None:
            return None
        return self.minimum == self.bound

    @property
    def respects_bound(self) -> bool | None:
        if self.bound is None or self.minimum is None:
            return None
        return self.minimum >= self.bound

    @property
    def unique(self) -> bool:
        return len(self.minimizers) == 1

    def to_json(self) -> dict:
        def frac(x: Fraction | None):
            return None if x is None else {"num": x.numerator, "den": x.denominator}

        return {
            "spec": asdict(self.spec),
            "bound": frac(self.bound),
            "minimum": frac(self.minimum),
            "minimizers": list(self.minimizers),
            "equal": self.equal,
            "respects_bound": self.respects_bound,
            "partial": self.partial,
            "class_size": self.class_size,
            "explored": self.explored,
            "elapsed": round(self.elapsed, 3),
        }


def min_variation(spec: SearchSpec, workers: int = 1) -> SearchReport:
    t0 = time.perf_counter()
    result = enumerate_class(spec, workers)
    values = {canonical_graph6(g): variation_randic(g) for g in result}
    minimum = min(values.values()) if values else None
    minimizers = sorted(s for s, v in values.items() if v == minimum)
    bound = _applicable_bound(spec)
    return SearchReport(
        spec=spec,
        minimum=minimum,
        minimizers=minimizers,
        class_size=len(values),
        bound=None if bound is None else bound.value,
        partial=result.partial,
        explored=result.explored,
        elapsed=time.perf_counter() - t0,
        values=values,
    )


def gnpk_membership(g: Graph, k: int, ps) -> int | None:
    """Return p if g lies in the (n, p, k) family for some p in ps, else None.

    Membership means: p vertices of degree k, the rest of degree n-1, and the
    complement restricted to the degree-k vertices is (n-k-1)-regular.
    """
    n = g.order
    degs = [row.bit_count() for row in g.adj]
    low = [v for v, d in enumerate(degs) if d == k]
    if any(d not in (k, n - 1) for d in degs) or len(low) not in ps:
        return None
    h = g.complement()
    mask = sum(1 << v for v in low)
    if any((h.adj[v] & mask).bit_count() != n - k - 1 for v in low):
        return None
    return len(low)


def gnpk_membership_by_profile(g: Graph, k: int, ps) -> int | None:
    """Same question answered by comparing degree profiles."""
    prof = degree_profile(g)
    for p in sorted(ps):
        try:
            if prof == gnpk_profile(g.order, p, k):
                return p
        except (InputError, FeasibilityError):
            continue
    return None


@dataclass
class ConjectureReport:
    n: int
    k: int
    p_values: list[int]
    theorem_regime: bool
    conjectured_bound: Fraction
    search: SearchReport
    member_p: dict[str, int | None]

    @property
    def partial(self) -> bool:
        return self.search.partial

    @property
    def minimum_matches(self) -> bool | None:
        if self.search.minimum is None:
            return None
        return self.search.minimum == self.conjectured_bound

    @property
    def all_minimizers_in_family(self) -> bool:
        return all(p is not None for p in self.member_p.values())

    def to_json(self) -> dict:
        b = self.conjectured_bound
        return {
            "n": self.n,
            "k": self.k,
            "p_values": self.p_values,
            "theorem_regime": self.theorem_regime,
            "conjectured_bound": {"num": b.numerator, "den": b.denominator},
            "minimum_matches": self.minimum_matches,
            "all_minimizers_in_family": self.all_minimizers_in_family,
            "member_p": self.member_p,
            "search": self.search.to_json(),
        }


def probe_conjecture(n: int, k: int, workers: int = 1, budget: int | None = None) -> ConjectureReport:
    """Compare the exhaustive minimum with the conjectured extremal value.

    Nothing here assumes the conjecture holds; the report just records
    whether the search agrees.
    """
    choice = conjecture_p(n, k)
    ps = sorted(choice.values)
    if choice.theorem_regime:
        value = bound_theorem1(n, k).value
    else:
        value = min(conjectured_bound(n, k, p) for p in ps)
    rep = min_variation(SearchSpec(n, k, budget=budget), workers)
    members = {s: gnpk_membership(from_graph6(s), k, ps) for s in rep.minimizers}
    return ConjectureReport(n, k, ps, choice.theorem_regime, value, rep, members)
