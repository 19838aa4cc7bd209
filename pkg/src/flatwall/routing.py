"""Constructive Menger routing: disjoint linkages or small separating cuts."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .flow import vertex_disjoint_flow
from .graph import Graph, GraphError, is_path_in


@dataclass
class Linkage:
    """k pairwise vertex-disjoint paths from source_set to target_set."""

    paths: list[list[int]]
    source_set: frozenset
    target_set: frozenset

    def __len__(self) -> int:
        return len(self.paths)

    def vertices(self) -> set[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p)
        return out

    def check(self, g: Graph) -> str | None:
        seen: set[int] = set()
        for p in self.paths:
            if not p:
                return "empty path"
            if len(p) > 1 and not is_path_in(g, p):
                return f"not a simple path of the host: {p}"
            if p[0] not in self.source_set:
                return f"path does not start in the source set: {p}"
            if p[-1] not in self.target_set:
                return f"path does not end in the target set: {p}"
            if seen & set(p):
                return "paths are not pairwise vertex-disjoint"
            seen.update(p)
        return None


@dataclass
class Cut:
    """A vertex set whose removal separates the sources from the targets."""

    vertices: list[int]

    def check(self, g: Graph, sources, targets, allowed=None) -> str | None:
        cs = set(self.vertices)
        ok = np.ones(g.n, dtype=np.bool_)
        if allowed is not None:
            ok[:] = False
            for v in allowed:
                ok[v] = True
        for v in cs:
            ok[v] = False
        live_src = [s for s in sources if ok[s]]
        reach: set[int] = set()
        stack = list(live_src)
        for s in live_src:
            reach.add(s)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if ok[w] and w not in reach:
                    reach.add(w)
                    stack.append(w)
        for t in targets:
            if t in cs:
                continue
            if t in reach:
                return f"cut fails to separate: target {t} still reachable"
        return None


def _as_mask(g: Graph, allowed) -> np.ndarray:
    if allowed is None:
        return np.ones(g.n, dtype=np.bool_)
    mask = np.zeros(g.n, dtype=np.bool_)
    for v in allowed:
        mask[v] = True
    return mask


def vertex_disjoint_linkage(g: Graph, sources, targets, k: int, allowed=None,
                            endpoints_no_through=False) -> Linkage | Cut:
    """k disjoint source->target paths, or a separating cut of size < k.

    Realized by unit-vertex-capacity max flow.  Vertices in both sets are
    used as zero-length paths first.  Exactly one of the two outcomes is
    returned.  With endpoints_no_through, no source or target vertex may
    appear as an interior vertex of a returned path.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    sources = sorted(set(int(s) for s in sources))
    targets = sorted(set(int(t) for t in targets))
    for v in sources + targets:
        if not g.has_vertex(v):
            raise GraphError(f"terminal {v} out of range")
    mask = _as_mask(g, allowed)
    shared = [v for v in sources if v in set(targets) and mask[v]]
    paths = [[v] for v in shared[:k]]
    need = k - len(paths)
    if need <= 0:
        return Linkage(paths, frozenset(sources), frozenset(targets))
    for v in shared:
        mask[v] = False
    src = [s for s in sources if mask[s]]
    tgt = [t for t in targets if mask[t]]
    res = vertex_disjoint_flow(g, src, tgt, need, allowed_mask=mask,
                               sources_no_through=endpoints_no_through,
                               targets_no_through=endpoints_no_through)
    if res.paths is not None:
        return Linkage(paths + res.paths, frozenset(sources), frozenset(targets))
    return Cut(sorted(set(res.cut) | set(shared)))


def reroute_linkage(h: Graph, x, y, x_sub, full: Linkage, partial: Linkage) -> Linkage:
    """k disjoint x->y paths, k-1 of them starting in x_sub.

    Follows the unification argument: the vertices of x minus x_sub are
    merged into one super-vertex and the flow is re-run; the resulting
    paths are internally disjoint from x and y.
    """
    x = sorted(set(int(v) for v in x))
    y = sorted(set(int(v) for v in y))
    x_sub = sorted(set(int(v) for v in x_sub))
    if not set(x_sub) <= set(x):
        raise GraphError("x_sub must be a subset of x")
    k = len(full.paths)
    if len(x_sub) < k - 1:
        raise GraphError("x_sub smaller than k-1")
    if len(partial.paths) != k - 1:
        raise GraphError("partial linkage must have exactly k-1 paths")
    if full.check(h) is not None:
        raise GraphError("full linkage invalid: " + str(full.check(h)))
    if partial.check(h) is not None:
        raise GraphError("partial linkage invalid: " + str(partial.check(h)))
    for p in partial.paths:
        if p[0] not in set(x_sub):
            raise GraphError("partial linkage must originate in x_sub")
        for v in p[1:-1]:
            if v in set(x) or v in set(y):
                raise GraphError("partial linkage not internally disjoint from x and y")

    rest = [v for v in x if v not in set(x_sub)]
    if not rest:
        res = vertex_disjoint_linkage(h, x_sub, y, k, endpoints_no_through=True)
        if isinstance(res, Cut):
            raise GraphError("rerouting failed: sets are not k-linked")
        return res
    star = h.n  # the unified vertex standing for x minus x_sub
    extra = sorted({(u, star) for r in rest for u in h.neighbors(r) if u not in set(rest)})
    h2 = h.with_vertices(1, extra)
    allowed = [v for v in range(h2.n) if v not in set(rest)]
    res = vertex_disjoint_linkage(h2, x_sub + [star], y, k, allowed=allowed,
                                  endpoints_no_through=True)
    if isinstance(res, Cut):
        raise GraphError("rerouting failed despite a full linkage existing")
    out = []
    for p in res.paths:
        if p[0] == star:
            if len(p) == 1:
                raise GraphError("degenerate unified path")
            first = min(r for r in rest if h.has_edge(r, p[1]))
            p = [first] + p[1:]
        out.append(p)
    link = Linkage(out, frozenset(x), frozenset(y))
    err = link.check(h)
    if err is not None:
        raise GraphError("rerouted linkage failed validation: " + err)
    return link
