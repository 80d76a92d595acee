from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import pytest

from rprime.graph import Graph, graph_from_edges


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return graph_from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def nx_rprime(h: nx.Graph) -> Fraction:
    """R' straight from networkx degrees, kept apart from the package code."""
    d = dict(h.degree())
    return sum((Fraction(1, max(d[u], d[v])) for u, v in h.edges), Fraction(0))


def random_connected(rng: random.Random, max_n: int = 12) -> Graph:
    while True:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.2, 0.9)
        es = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = graph_from_edges(n, es)
        if nx.is_connected(to_nx(g)):
            return g


@pytest.fixture(scope="session")
def connected_corpus() -> list[Graph]:
    rng = random.Random(20261015)
    return [random_connected(rng) for _ in range(1000)]


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
