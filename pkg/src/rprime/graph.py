"""Simple undirected graphs on vertices 0..n-1, stored as neighbour bitmasks.

Also holds the two text formats graphs travel in: graph6 and the edge list
``"n; u-v,u-v,..."``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise InputError("graph order must be >= 1")
        if len(self.adj) != self.order:
            raise InputError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise InputError(f"bad adjacency row for vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at {u}-{v}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(self.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Graph whose vertex i is the old vertex ``perm[i]``."""
        pos = [0] * self.order
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.order
        for i, v in enumerate(perm):
            r = 0
            for u in _bits(self.adj[v]):
                r |= 1 << pos[u]
            rows[i] = r
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph({to_edgelist(self)!r})"


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def graph_from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; repeated pairs collapse to one edge."""
    if order < 1:
        raise InputError("graph order must be >= 1")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise InputError(f"edge {u}-{v} out of range for order {order}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def degree_sequence(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def is_connected(g: Graph) -> bool:
    seen = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        new = g.adj[v] & ~seen
        seen |= new
        queue.extend(_bits(new))
    return seen == (1 << g.order) - 1


# -- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[t : t + 6])), 2)) for t in range(0, len(bits), 6)
    )
    return _encode_n(g.order) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise InputError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise InputError(f"invalid graph6 character in {s!r}")
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise InputError("truncated graph6 header")
        n = 0
        for x in vals[2:8]:
            n = n << 6 | x
        rest = vals[8:]
    else:
        if len(vals) < 4:
            raise InputError("truncated graph6 header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        rest = vals[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise InputError(f"graph6 body length {len(rest)} does not match n={n}")
    bits = [x >> s & 1 for x in rest for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise InputError("nonzero graph6 padding bits")
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits[t]:
                edges.append((i, j))
            t += 1
    return graph_from_edges(n, edges)


# -- edge list ----------------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    return f"{g.order}; " + ",".join(f"{u}-{v}" for u, v in g.edges())


def from_edgelist(text: str) -> Graph:
    head, sep, tail = text.strip().partition(";")
    if not sep:
        raise InputError(f"edge list missing ';': {text.strip()!r}")
    try:
        n = int(head)
        edges = []
        for tok in tail.split(","):
            tok = tok.strip()
            if tok:
                a, b = tok.split("-")
                edges.append((int(a), int(b)))
    except ValueError as exc:
        raise InputError(f"cannot parse edge list {text.strip()!r}") from exc
    return graph_from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either format; a ';' marks the edge-list form."""
    return from_edgelist(text) if ";" in text else from_graph6(text)
