"""Canonical labelling by partition refinement and individualisation.

The canonical form of a graph is the relabelling whose upper-triangle
adjacency bits, read in graph6 order, form the lexicographically smallest
string among the orderings compatible with an equitable refinement of the
degree partition. Since the refinement is itself label-free, that set of
orderings maps onto itself under relabelling. Branches that differ only by
swapping two twin vertices are skipped.
"""

from __future__ import annotations

from .graph import Graph, to_graph6


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [_mask(c) for c in cells]
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            split = True
            out.extend([v for v in c if sig[v] == s] for s in keys)
        cells = out
        if not split:
            return cells


def _key(adj: tuple[int, ...], perm: list[int]) -> int:
    key = 0
    for j in range(1, len(perm)):
        row = adj[perm[j]]
        for i in range(j):
            key = key << 1 | (row >> perm[i] & 1)
    return key


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_perm(adj: tuple[int, ...]) -> list[int]:
    """Ordering of the vertices that yields the canonical form."""
    n = len(adj)
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((t for t, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [c[0] for c in cells]
            key = _key(adj, perm)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, perm
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            if any(_twins(adj, u, v) for u in reps):
                continue
            reps.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return best[1]


def canonical_adj(adj: tuple[int, ...]) -> tuple[int, ...]:
    perm = canonical_perm(adj)
    pos = [0] * len(adj)
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        r = 0
        row = adj[v]
        while row:
            low = row & -row
            r |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows.append(r)
    return tuple(rows)


def canonical_form(g: Graph) -> Graph:
    return Graph(g.order, canonical_adj(g.adj))


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))
