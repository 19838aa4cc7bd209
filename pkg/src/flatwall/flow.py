"""Backend dispatch for the routing kernels.

The numba lane is the default.  Set FLATWALL_BACKEND=numpy (or =python) to
run the same kernels uncompiled; `benchmarks/bench_flow.py` compares the two.
"""

from __future__ import annotations

import os

import numpy as np

from . import _flowcore

_BACKEND = None
_IMPL = None


def backend_name() -> str:
    global _BACKEND
    if _BACKEND is None:
        want = os.environ.get("FLATWALL_BACKEND", "numba").strip().lower()
        if want in ("numpy", "python", "nonumba", "0"):
            _BACKEND = "numpy"
        else:
            try:
                import numba  # noqa: F401
                _BACKEND = "numba"
            except ImportError:
                _BACKEND = "numpy"
    return _BACKEND


def _impl():
    global _IMPL
    if _IMPL is None:
        if backend_name() == "numba":
            from numba import njit
            jit = njit(cache=True)
            _IMPL = {
                "bfs_parents": jit(_flowcore.bfs_parents),
                "maxflow_augment": jit(_flowcore.maxflow_augment),
                "residual_reachable": jit(_flowcore.residual_reachable),
                "walk_paths": jit(_flowcore.walk_paths),
            }
        else:
            _IMPL = {
                "bfs_parents": _flowcore.bfs_parents,
                "maxflow_augment": _flowcore.maxflow_augment,
                "residual_reachable": _flowcore.residual_reachable,
                "walk_paths": _flowcore.walk_paths,
            }
    return _IMPL


INF_CAP = _flowcore.INF_CAP


def bfs_parent_array(g, allowed_mask: np.ndarray, sources) -> np.ndarray:
    """Deterministic multi-source BFS forest; parent -2 marks a root."""
    indptr, indices = g.csr()
    src = np.asarray(sorted(sources), dtype=np.int64)
    return _impl()["bfs_parents"](indptr, indices, allowed_mask, src, g.n)


def bfs_path(g, allowed_mask: np.ndarray, sources, targets) -> list[int] | None:
    """Lexicographic BFS path from sources to the first reached target."""
    parent = bfs_parent_array(g, allowed_mask, sources)
    tset = [t for t in sorted(set(targets)) if parent[t] != -1]
    if not tset:
        return None
    # first target in BFS order = smallest distance, ties by discovery
    best = min(tset, key=lambda t: _depth(parent, t))
    path = [best]
    v = best
    while parent[v] != -2:
        v = int(parent[v])
        path.append(v)
    path.reverse()
    return path


def _depth(parent, t) -> tuple[int, int]:
    d = 0
    v = t
    while parent[v] != -2:
        v = int(parent[v])
        d += 1
    return (d, t)


class FlowResult:
    __slots__ = ("paths", "cut", "flow")

    def __init__(self, paths, cut, flow):
        self.paths = paths
        self.cut = cut
        self.flow = flow


def vertex_disjoint_flow(g, sources, targets, k: int, allowed_mask=None,
                         sources_no_through=False, targets_no_through=False) -> FlowResult:
    """Up to k vertex-disjoint source->target paths, or a separating cut.

    Vertices carry capacity one via in/out splitting; every other arc is
    effectively unbounded so the min cut is realized on vertex arcs only.
    With `sources_no_through` (resp. targets) set, source (target) vertices
    cannot appear as interior vertices of the returned paths.
    """
    n = g.n
    indptr, indices = g.csr()
    if allowed_mask is None:
        allowed = np.ones(n, dtype=np.bool_)
    else:
        allowed = np.asarray(allowed_mask, dtype=np.bool_).copy()
    src = [s for s in sorted(set(sources)) if allowed[s]]
    tgt = [t for t in sorted(set(targets)) if allowed[t]]
    src_set, tgt_set = set(src), set(tgt)

    S, T = 2 * n, 2 * n + 1
    afrom, ato, acap = [], [], []

    def arc(u, v, c):
        afrom.append(u)
        ato.append(v)
        acap.append(c)
        afrom.append(v)
        ato.append(u)
        acap.append(0)

    for v in range(n):
        if allowed[v]:
            arc(2 * v, 2 * v + 1, 1)
    for u in range(n):
        if not allowed[u]:
            continue
        for j in range(int(indptr[u]), int(indptr[u + 1])):
            w = int(indices[j])
            if not allowed[w]:
                continue
            if sources_no_through and w in src_set:
                continue
            if targets_no_through and u in tgt_set:
                continue
            arc(2 * u + 1, 2 * w, int(INF_CAP))
    for s in src:
        arc(S, 2 * s, int(INF_CAP))
    for t in tgt:
        arc(2 * t + 1, T, int(INF_CAP))

    narcs = len(afrom)
    afrom_a = np.asarray(afrom, dtype=np.int64)
    ato_a = np.asarray(ato, dtype=np.int64)
    cap_a = np.asarray(acap, dtype=np.int64)
    order = np.argsort(afrom_a, kind="stable")
    pos = np.empty(narcs, dtype=np.int64)
    pos[order] = np.arange(narcs, dtype=np.int64)
    rev = np.empty(narcs, dtype=np.int64)
    ids = np.arange(narcs, dtype=np.int64)
    rev[pos[ids]] = pos[ids ^ 1]
    ato_s = ato_a[order]
    cap_s = cap_a[order]
    aptr = np.zeros(2 * n + 3, dtype=np.int64)
    np.add.at(aptr, afrom_a[order] + 1, 1)
    aptr = np.cumsum(aptr)

    impl = _impl()
    orig_cap = cap_s.copy()
    flow = int(impl["maxflow_augment"](aptr, ato_s, rev, cap_s, S, T, int(k)))
    if flow >= k:
        nodes, offsets = impl["walk_paths"](aptr, ato_s, cap_s, orig_cap, S, T, n, flow)
        paths = [[int(x) for x in nodes[offsets[i]:offsets[i + 1]]]
                 for i in range(len(offsets) - 1)]
        paths.sort(key=lambda p: p[0])
        return FlowResult(paths, None, flow)
    seen = impl["residual_reachable"](aptr, ato_s, cap_s, S)
    cut = sorted(v for v in range(n)
                 if allowed[v] and seen[2 * v] and not seen[2 * v + 1])
    return FlowResult(None, cut, flow)
