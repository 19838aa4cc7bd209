"""Simple undirected graphs with dense integer vertex ids, plus separations.

This is the substrate every other module builds on.  Vertices are 0..n-1,
edges are unordered pairs, no loops, no parallels.  A CSR view is cached for
the numeric routing kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class GraphError(ValueError):
    """Structural problem with a graph or graph-referencing input."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_edges", "_csr")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(n)]
        eset: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in eset:
                continue
            eset.add(e)
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        self.n = n
        self._adj = adj
        self._edges = eset
        self._csr = None

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> set[tuple[int, int]]:
        return set(self._edges)

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edges

    def has_vertex(self, v) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.n

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived views -----------------------------------------------------

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) adjacency in CSR form, neighbor lists sorted."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self._adj[v])
            indices = np.empty(int(indptr[-1]), dtype=np.int64)
            for v in range(self.n):
                indices[indptr[v]:indptr[v + 1]] = self._adj[v]
            self._csr = (indptr, indices)
        return self._csr

    def with_edges(self, extra_edges) -> "Graph":
        return Graph(self.n, list(self._edges) + list(extra_edges))

    def with_vertices(self, k: int, extra_edges=()) -> "Graph":
        """Graph extended by k fresh vertices n..n+k-1 plus extra edges."""
        return Graph(self.n + k, list(self._edges) + list(extra_edges))

    def induced_edges(self, vertices) -> set[tuple[int, int]]:
        vs = set(vertices)
        return {(u, v) for (u, v) in self._edges if u in vs and v in vs}

    def connected_components(self, allowed=None) -> list[list[int]]:
        """Components of the subgraph induced by `allowed` (default: all)."""
        if allowed is None:
            ok = [True] * self.n
        else:
            ok = [False] * self.n
            for v in allowed:
                ok[v] = True
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if not ok[s] or seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if ok[w] and not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected_subset(self, vertices) -> bool:
        vs = sorted(set(vertices))
        if not vs:
            return False
        comps = self.connected_components(allowed=vs)
        return len(comps) == 1


def path_edges(path) -> list[tuple[int, int]]:
    return [_norm_edge(path[i], path[i + 1]) for i in range(len(path) - 1)]


def is_path_in(g: Graph, path) -> bool:
    if len(path) == 0:
        return False
    if len(set(path)) != len(path):
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset
    edges: frozenset

    @staticmethod
    def of(vertices, edges) -> "Subgraph":
        return Subgraph(frozenset(int(v) for v in vertices),
                        frozenset(_norm_edge(int(u), int(v)) for u, v in edges))


@dataclass(frozen=True)
class Separation:
    """A pair of edge-disjoint subgraphs covering the host graph."""

    side_x: Subgraph
    side_y: Subgraph

    @property
    def order(self) -> int:
        return len(self.side_x.vertices & self.side_y.vertices)

    @property
    def middle(self) -> frozenset:
        return self.side_x.vertices & self.side_y.vertices

    def check(self, g: Graph) -> str | None:
        """None if this is a valid separation of g, else the violated clause."""
        vx, vy = self.side_x.vertices, self.side_y.vertices
        ex, ey = self.side_x.edges, self.side_y.edges
        if vx | vy != set(range(g.n)):
            return "sides do not cover the vertex set"
        if ex | ey != g.edges():
            return "sides do not cover the edge set"
        if ex & ey:
            return "edge sets of the two sides intersect"
        for (u, v) in ex:
            if u not in vx or v not in vx:
                return "side_x contains an edge leaving its vertex set"
        for (u, v) in ey:
            if u not in vy or v not in vy:
                return "side_y contains an edge leaving its vertex set"
        mid = vx & vy
        for (u, v) in g.edges():
            if (u in vx - mid and v in vy - mid) or (v in vx - mid and u in vy - mid):
                return f"edge ({u},{v}) joins X-only to Y-only"
        return None


# -- graph text format ----------------------------------------------------
#
# Header `p <n> <m>`, then m lines `e <u> <v>` with 0-based ids.  Blank
# lines and `#` comments are ignored.

def write_graph_text(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    for (u, v) in sorted(g.edges()):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    n = None
    m_decl = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed header")
            n, m_decl = int(parts[1]), int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge line")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing `p` header")
    g = Graph(n, edges)
    if g.m != m_decl:
        raise GraphError(f"header declares {m_decl} edges, file has {g.m}")
    return g


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph_text(g))
