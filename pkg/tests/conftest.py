from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from indpoly.graph import Graph, RootedGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def rooted_graphs(draw, min_n=1, max_n=8):
    G = draw(graphs(min_n=min_n, max_n=max_n))
    return RootedGraph(G, draw(st.integers(0, G.n - 1)))


def independent_sets(G: Graph):
    """Every independent set by direct enumeration (test-only oracle)."""
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            if all((u, v) not in G.edges for u, v in combinations(S, 2)):
                yield S


def census(G: Graph) -> tuple[int, ...]:
    counts = [0] * (G.n + 1)
    for S in independent_sets(G):
        counts[len(S)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def enum_value(G: Graph) -> int:
    return sum((-1) ** len(S) for S in independent_sets(G))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    def record(n: int, ok: bool, msg: str) -> None:
        ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {msg}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
