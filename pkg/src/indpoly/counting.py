"""Exact independence polynomials and their value at -1.

The empty independent set is always counted, so every polynomial has
constant term 1 and ``I(empty graph) = 1``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .brackets import Bracket
from .graph import Graph, RootedGraph

DEFAULT_ORACLE_CAP = 25


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense polynomial with exact integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @classmethod
    def const(cls, c: int) -> IntegerPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntegerPolynomial.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntegerPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntegerPolynomial:
        out = ONE
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


ONE = IntegerPolynomial((1,))
X = IntegerPolynomial((0, 1))


# recursion over vertex subsets of a fixed adjacency -------------------------

def _components(adj, verts: frozenset[int]) -> list[frozenset[int]]:
    left = set(verts)
    out = []
    while left:
        s = min(left)
        left.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in left:
                    left.discard(w)
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def _edge_count(adj, verts: frozenset[int]) -> int:
    return sum(1 for u in verts for w in adj[u] if w in verts) // 2


def _two_core(adj, verts: frozenset[int]) -> set[int]:
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
                if deg[w] == 1:
                    stack.append(w)
    return core


def _tree(adj, verts: frozenset[int], one, x):
    # inc/exc: independent sets of the subtree with/without its root
    root = min(verts)
    order, parent = [root], {root: -1}
    for u in order:
        for w in adj[u]:
            if w in verts and w not in parent:
                parent[w] = u
                order.append(w)
    inc = {u: x for u in verts}
    exc = {u: one for u in verts}
    for u in reversed(order):
        p = parent[u]
        if p != -1:
            inc[p] = inc[p] * exc[u]
            exc[p] = exc[p] * (inc[u] + exc[u])
    return inc[root] + exc[root]


def _connected(adj, verts: frozenset[int], one, x):
    m = _edge_count(adj, verts)
    if m == 0:
        return (one + x) ** len(verts)
    if m == len(verts) - 1:
        return _tree(adj, verts, one, x)
    core = _two_core(adj, verts)
    v = max(sorted(core), key=lambda u: sum(1 for w in adj[u] if w in verts))
    minus_v = verts - {v}
    minus_nv = minus_v - adj[v]
    return _evaluate(adj, minus_v, one, x) + x * _evaluate(adj, minus_nv, one, x)


def _evaluate(adj, verts: frozenset[int], one, x):
    out = one
    for comp in _components(adj, verts):
        out = out * _connected(adj, comp, one, x)
    return out


def independence_polynomial(G: Graph) -> IntegerPolynomial:
    """I(G;x) by component splitting and vertex-deletion recursion.

    Components that are trees are finished by a leaf-to-root product;
    otherwise the pivot is a maximum-degree vertex of the 2-core (lowest
    label on ties), so every branch destroys at least one cycle.
    """
    return _evaluate(G.adj, frozenset(G.vertices), ONE, X)


def value_at_minus_one(G: Graph) -> int:
    """I(G;-1) via the same recursion over plain integers."""
    return _evaluate(G.adj, frozenset(G.vertices), 1, -1)


def independence_number(G: Graph) -> int:
    return independence_polynomial(G).degree


def bracket(Gv: RootedGraph) -> Bracket:
    G, v = Gv.graph, Gv.root
    verts = frozenset(G.vertices) - {v}
    a = _evaluate(G.adj, verts, 1, -1)
    b = _evaluate(G.adj, verts - G.adj[v], 1, -1)
    assert a - b == value_at_minus_one(G)
    return Bracket.of(a, b)


# brute-force oracle ----------------------------------------------------------

def oracle_cap() -> int:
    return int(os.environ.get("INDPOLY_ORACLE_CAP", DEFAULT_ORACLE_CAP))


_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def _independent_masks(k: int, edges: list[tuple[int, int]]) -> np.ndarray:
    masks = np.arange(1 << k, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for u, v in edges:
        ok &= ((masks >> u) & (masks >> v) & 1) == 0
    return ok


def _popcount(masks: np.ndarray, bits: int) -> np.ndarray:
    return sum((_POP16[(masks >> s) & 0xFFFF] for s in range(0, bits, 16)), np.zeros_like(masks))


def brute_force_census(G: Graph, cap: int | None = None) -> IntegerPolynomial:
    """Tally every vertex subset that contains no edge, by size.

    Each subset is split into a low part (vertices below ``n // 2``) and a
    high part; it is independent iff both parts are and no edge joins
    them.  All ``2**n`` pairs are checked, so graphs above ``cap``
    vertices are refused.
    """
    cap = oracle_cap() if cap is None else cap
    n = G.n
    if n > cap:
        raise SizeLimitError(f"{n} vertices exceeds brute-force cap {cap}")
    lo = n // 2
    hi = n - lo
    low_edges = [(u, v) for u, v in G.edges if v < lo]
    high_edges = [(u - lo, v - lo) for u, v in G.edges if u >= lo]
    low_ok = _independent_masks(lo, low_edges)
    high_ok = _independent_masks(hi, high_edges)
    low_masks = np.arange(1 << lo, dtype=np.int64)
    low_size = _popcount(low_masks, lo)
    high_masks = np.arange(1 << hi, dtype=np.int64)
    high_size = _popcount(high_masks, hi)
    # low neighbours of each high vertex, OR-ed over every high mask
    forbid = np.zeros(1 << hi, dtype=np.int64)
    for j in range(hi):
        nb = sum(1 << u for u in G.adj[lo + j] if u < lo)
        forbid |= np.where((high_masks >> j) & 1, nb, 0)
    counts = np.zeros(n + 1, dtype=np.int64)
    for h in range(1 << hi):
        ok = low_ok & high_ok[h] & ((low_masks & forbid[h]) == 0)
        counts += np.bincount(low_size[ok] + high_size[h], minlength=n + 1)[: n + 1]
    return IntegerPolynomial(tuple(int(c) for c in counts))
