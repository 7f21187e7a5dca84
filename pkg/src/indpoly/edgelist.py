"""Plain-text edge-list format.

::

    # comment
    n 6
    r 0
    0 1
    1 2

``n`` must come first among data lines, ``r`` is optional, each remaining
line is one edge ``u v`` with 0-based labels.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, RootedGraph


class EdgeListError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_edge_list(text: str) -> tuple[Graph, int | None]:
    n = None
    root = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise EdgeListError(lineno, "repeated 'n' line")
            if len(parts) != 2:
                raise EdgeListError(lineno, "expected 'n <vertex_count>'")
            n = _int(parts[1], lineno)
            if n < 0:
                raise EdgeListError(lineno, "negative vertex count")
            continue
        if n is None:
            raise EdgeListError(lineno, "'n <vertex_count>' must precede other data")
        if parts[0] == "r":
            if root is not None:
                raise EdgeListError(lineno, "repeated 'r' line")
            if len(parts) != 2:
                raise EdgeListError(lineno, "expected 'r <root>'")
            root = _int(parts[1], lineno)
            if not 0 <= root < n:
                raise EdgeListError(lineno, f"root {root} out of range")
            continue
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected 'u v', got {line!r}")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u == v:
            raise EdgeListError(lineno, f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"edge ({u}, {v}) out of range")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise EdgeListError(lineno, f"duplicate edge {u} {v}")
        edges.add(e)
    if n is None:
        raise EdgeListError(0, "missing 'n <vertex_count>' line")
    try:
        return Graph(n, frozenset(edges)), root
    except GraphError as exc:  # pragma: no cover - guarded above
        raise EdgeListError(0, str(exc)) from exc


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EdgeListError(lineno, f"not an integer: {tok!r}") from None


def format_edge_list(G: Graph | RootedGraph, comment: str | None = None) -> str:
    root = None
    if isinstance(G, RootedGraph):
        G, root = G.graph, G.root
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"n {G.n}")
    if root is not None:
        lines.append(f"r {root}")
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> tuple[Graph, int | None]:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(path: str | Path, G: Graph | RootedGraph, comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(G, comment))
