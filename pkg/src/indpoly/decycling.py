"""Exact decycling number (minimum feedback vertex set) and its certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError

EXHAUSTIVE_CAP = 15


class BudgetExceeded(RuntimeError):
    """The decycling number is larger than the allowed search budget."""

    def __init__(self, cap: int):
        super().__init__(f"phi > {cap}")
        self.cap = cap


def _acyclic(adj, verts: set[int] | frozenset[int]) -> bool:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in verts:
        for w in adj[u]:
            if w > u and w in parent:
                ru, rw = find(u), find(w)
                if ru == rw:
                    return False
                parent[ru] = rw
    return True


def _two_core(adj, verts: frozenset[int]) -> frozenset[int]:
    deg = {u: sum(1 for w in adj[u] if w in verts) for u in verts}
    core = set(verts)
    stack = [u for u, d in deg.items() if d <= 1]
    while stack:
        u = stack.pop()
        if u not in core:
            continue
        core.discard(u)
        for w in adj[u]:
            if w in core:
                deg[w] -= 1
                if deg[w] <= 1:
                    stack.append(w)
    return frozenset(core)


def _shortest_cycle(adj, verts: frozenset[int]) -> list[int] | None:
    """A shortest cycle inside ``verts``; BFS from each vertex in label order."""
    best: list[int] | None = None
    for s in sorted(verts):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in sorted(adj[u]):
                if w not in verts or w == parent[u]:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                    continue
                pu, pw = _path(parent, u), _path(parent, w)
                if set(pu[:-1]) & set(pw[:-1]):
                    continue  # closed walk, not a simple cycle through s
                cyc = pu[::-1] + pw[:-1]
                if best is None or len(cyc) < len(best):
                    found = cyc
                    break
        if found is not None:
            best = found
            if len(best) == 3:
                break
    return best


def _path(parent: dict[int, int], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    return out


def _packing_bound(adj, verts: frozenset[int]) -> int:
    """Greedy count of vertex-disjoint cycles; a lower bound on phi."""
    count = 0
    core = _two_core(adj, verts)
    while core:
        cyc = _shortest_cycle(adj, core)
        if cyc is None:
            break
        count += 1
        core = _two_core(adj, core - set(cyc))
    return count


def _search(adj, verts: frozenset[int], budget: int) -> set[int] | None:
    core = _two_core(adj, verts)
    if not core:
        return set()
    if budget == 0 or _packing_bound(adj, core) > budget:
        return None
    cyc = _shortest_cycle(adj, core)
    for c in cyc:
        sub = _search(adj, core - {c}, budget - 1)
        if sub is not None:
            return sub | {c}
    return None


def min_decycling(G: Graph, budget_cap: int | None = None) -> tuple[int, frozenset[int]]:
    """Exact phi(G) with a witness set, by iterative deepening.

    Each level branches on the vertices of a shortest remaining cycle.
    Raises :class:`BudgetExceeded` once the budget would pass ``budget_cap``.
    """
    verts = frozenset(G.vertices)
    t = 0
    while True:
        if budget_cap is not None and t > budget_cap:
            raise BudgetExceeded(budget_cap)
        found = _search(G.adj, verts, t)
        if found is not None:
            return t, frozenset(found)
        t += 1


def _check_subset(G: Graph, S: Iterable[int]) -> set[int]:
    S = set(S)
    for v in S:
        G._check(v)
    return S


def is_decycling_set(G: Graph, S: Iterable[int]) -> bool:
    S = _check_subset(G, S)
    return _acyclic(G.adj, frozenset(G.vertices) - S)


def exhaustive_decycling(G: Graph, cap: int = EXHAUSTIVE_CAP) -> int:
    """Smallest decycling set size by trying every subset, smallest first."""
    if G.n > cap:
        raise ValueError(f"{G.n} vertices exceeds exhaustive cap {cap}")
    verts = frozenset(G.vertices)
    for size in range(G.n + 1):
        for S in combinations(range(G.n), size):
            if _acyclic(G.adj, verts - set(S)):
                return size
    raise AssertionError("unreachable: deleting every vertex leaves a forest")


@dataclass(frozen=True)
class PhiCertificate:
    """k vertex-disjoint cycles (phi >= k) and a decycling set of size k (phi <= k)."""

    cycles: tuple[tuple[int, ...], ...]
    decycling_set: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.decycling_set)

    def to_dict(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles], "decycling_set": sorted(self.decycling_set)}

    @classmethod
    def from_dict(cls, d: dict) -> PhiCertificate:
        return cls(tuple(tuple(c) for c in d["cycles"]), frozenset(d["decycling_set"]))


def phi_certificate_problems(G: Graph, cert: PhiCertificate) -> list[str]:
    """Every violated certificate condition; empty means phi(G) = cert.k."""
    problems = []
    seen: set[int] = set()
    for i, cyc in enumerate(cert.cycles):
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            problems.append(f"cycle {i} is not a simple cycle of length >= 3")
            continue
        if any(not (isinstance(v, int) and 0 <= v < G.n) for v in cyc):
            problems.append(f"cycle {i} uses a vertex outside the graph")
            continue
        for u, w in zip(cyc, cyc[1:] + cyc[:1]):
            if w not in G.adj[u]:
                problems.append(f"cycle {i}: {u}-{w} is not an edge")
                break
        if seen & set(cyc):
            problems.append(f"cycle {i} overlaps an earlier cycle")
        seen |= set(cyc)
    try:
        if not is_decycling_set(G, cert.decycling_set):
            problems.append("graph minus decycling_set still has a cycle")
    except GraphError as exc:
        problems.append(f"decycling_set: {exc}")
    if len(cert.decycling_set) != len(cert.cycles):
        problems.append(
            f"{len(cert.cycles)} cycles listed but decycling_set has {len(cert.decycling_set)} vertices"
        )
    return problems


def check_phi_certificate(G: Graph, cert: PhiCertificate) -> bool:
    return not phi_certificate_problems(G, cert)
