"""Immutable simple graphs, rooted graphs, pasting and path extension.

Vertices are the integers ``0..n-1``.  Every operation returns a new value;
nothing is mutated after construction.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid vertex, edge or constructor argument."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset(_norm(u, v) for u, v in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} not in graph on {self.n} vertices")


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self) -> None:
        self.graph._check(self.root)

    @property
    def n(self) -> int:
        return self.graph.n


# constructors -------------------------------------------------------------

def make_path(n: int) -> Graph:
    """Path on ``n`` vertices labelled in traversal order."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int = 0) -> Graph:
    return Graph(n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Labelled Erdős–Rényi G(n, p) drawn from ``rng``."""
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


# vertex deletion -----------------------------------------------------------

def induced_subgraph(G: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, relabelled preserving label order.

    Returns the subgraph and the map old label -> new label.
    """
    kept = sorted(set(keep))
    for v in kept:
        G._check(v)
    relabel = {old: new for new, old in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph.from_edges(len(kept), edges), relabel


def delete_vertices(G: Graph, drop: Iterable[int]) -> Graph:
    drop = set(drop)
    for v in drop:
        G._check(v)
    return induced_subgraph(G, (v for v in G.vertices if v not in drop))[0]


def delete_vertex(G: Graph, v: int) -> Graph:
    G._check(v)
    return delete_vertices(G, (v,))


def delete_closed_neighborhood(G: Graph, v: int) -> Graph:
    return delete_vertices(G, G.closed_neighborhood(v))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    edges = list(G.edges) + [(u + shift, v + shift) for u, v in H.edges]
    return Graph.from_edges(G.n + H.n, edges)


# rooted operations -----------------------------------------------------------

def paste_with_map(Gv: RootedGraph, Hw: RootedGraph) -> tuple[RootedGraph, dict[int, int]]:
    """Identify the two roots.

    G keeps its labels and its root; H's other vertices follow in label
    order.  The returned map sends each H label to its new label.
    """
    G, H = Gv.graph, Hw.graph
    hmap: dict[int, int] = {}
    nxt = G.n
    for x in H.vertices:
        if x == Hw.root:
            hmap[x] = Gv.root
        else:
            hmap[x] = nxt
            nxt += 1
    edges = list(G.edges) + [(hmap[u], hmap[v]) for u, v in H.edges]
    return RootedGraph(Graph.from_edges(nxt, edges), Gv.root), hmap


def paste(Gv: RootedGraph, Hw: RootedGraph) -> RootedGraph:
    return paste_with_map(Gv, Hw)[0]


def extend(Gv: RootedGraph, ell: int) -> RootedGraph:
    """Hang a path with ``ell`` edges off the root and re-root at its far end."""
    if ell < 0:
        raise GraphError("extension length must be non-negative")
    if ell == 0:
        return Gv
    G = Gv.graph
    chain = [Gv.root] + list(range(G.n, G.n + ell))
    edges = list(G.edges) + list(zip(chain, chain[1:]))
    return RootedGraph(Graph.from_edges(G.n + ell, edges), chain[-1])


# structure -------------------------------------------------------------------

def component_vertex_sets(G: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest label."""
    seen = [False] * G.n
    comps = []
    for s in G.vertices:
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def components(G: Graph, with_maps: bool = False):
    """Connected components as relabelled induced subgraphs.

    With ``with_maps`` each entry is ``(subgraph, old_to_new)``.
    """
    out = [induced_subgraph(G, vs) for vs in component_vertex_sets(G)]
    return out if with_maps else [sub for sub, _ in out]


def is_connected(G: Graph) -> bool:
    return len(component_vertex_sets(G)) <= 1


def is_acyclic(G: Graph) -> bool:
    return G.m == G.n - len(component_vertex_sets(G))


def cyclomatic_number(G: Graph) -> int:
    return G.m - G.n + len(component_vertex_sets(G))


def find_cycle(G: Graph) -> list[int] | None:
    """Vertices of some cycle in traversal order, or None for a forest."""
    parent: dict[int, int] = {}
    for s in G.vertices:
        if s in parent:
            continue
        parent[s] = -1
        stack = [s]
        while stack:
            u = stack.pop()
            for w in sorted(G.adj[u]):
                if w == parent[u]:
                    continue
                if w in parent:
                    # w is on the tree path of u only if it was reached earlier
                    path_u = _tree_path(parent, u)
                    path_w = _tree_path(parent, w)
                    common = set(path_u) & set(path_w)
                    cu = [x for x in path_u if x not in common]
                    cw = [x for x in path_w if x not in common]
                    lca = next(x for x in path_u if x in common)
                    return cu + [lca] + cw[::-1]
                parent[w] = u
                stack.append(w)
    return None


def _tree_path(parent: dict[int, int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path
