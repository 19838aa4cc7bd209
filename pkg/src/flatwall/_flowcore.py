"""Hot routing kernels: unit-vertex-capacity max flow and multi-source BFS.

Every function here is written in the restricted style numba's nopython mode
accepts (flat int64/bool arrays, no Python objects).  `flow.py` compiles
these with @njit when the numba backend is active and calls them as plain
Python otherwise, so the two lanes share one source of truth.
"""

import numpy as np

INF_CAP = np.int64(1) << 40


def bfs_parents(indptr, indices, allowed, sources, n):
    """Multi-source BFS tree over the allowed vertices.

    Returns parent array: -1 unvisited, -2 root, else the parent vertex.
    Sources are seeded in array order and neighbors scanned in CSR order,
    so the tree (and hence every extracted path) is deterministic.
    """
    parent = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    for i in range(len(sources)):
        s = sources[i]
        if allowed[s] and parent[s] == -1:
            parent[s] = -2
            queue[tail] = s
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            if allowed[w] and parent[w] == -1:
                parent[w] = u
                queue[tail] = w
                tail += 1
    return parent


def maxflow_augment(aptr, ato, arev, cap, source, sink, want):
    """Edmonds-Karp on the prebuilt residual arc arrays, up to `want` units.

    Mutates cap in place; returns the achieved flow value.
    """
    nnodes = len(aptr) - 1
    parent_arc = np.empty(nnodes, dtype=np.int64)
    queue = np.empty(nnodes, dtype=np.int64)
    flow = 0
    while flow < want:
        for i in range(nnodes):
            parent_arc[i] = -1
        parent_arc[source] = -2
        queue[0] = source
        head = 0
        tail = 1
        reached = False
        while head < tail and not reached:
            u = queue[head]
            head += 1
            for k in range(aptr[u], aptr[u + 1]):
                if cap[k] > 0:
                    w = ato[k]
                    if parent_arc[w] == -1:
                        parent_arc[w] = k
                        if w == sink:
                            reached = True
                            break
                        queue[tail] = w
                        tail += 1
        if not reached:
            break
        # unit capacities on vertex arcs: bottleneck is always 1
        v = sink
        while v != source:
            k = parent_arc[v]
            cap[k] -= 1
            cap[arev[k]] += 1
            v = ato[arev[k]]
        flow += 1
    return flow


def residual_reachable(aptr, ato, cap, source):
    nnodes = len(aptr) - 1
    seen = np.zeros(nnodes, dtype=np.bool_)
    queue = np.empty(nnodes, dtype=np.int64)
    seen[source] = True
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(aptr[u], aptr[u + 1]):
            if cap[k] > 0 and not seen[ato[k]]:
                seen[ato[k]] = True
                queue[tail] = ato[k]
                tail += 1
    return seen


def walk_paths(aptr, ato, cap, orig_cap, source, sink, n, flow):
    """Decompose the flow into vertex paths (vertex caps are all 1).

    Returns (nodes, offsets): path i is nodes[offsets[i]:offsets[i+1]],
    a sequence of graph vertex ids from a source to a target.
    """
    nodes = np.empty(2 * n + flow, dtype=np.int64)
    offsets = np.empty(flow + 1, dtype=np.int64)
    npaths = 0
    pos = 0
    offsets[0] = 0
    for k in range(aptr[source], aptr[source + 1]):
        if orig_cap[k] - cap[k] > 0:  # used source arc
            v = ato[k] // 2  # in-node -> vertex id
            nodes[pos] = v
            pos += 1
            out = 2 * v + 1
            done = False
            while not done:
                advanced = False
                for j in range(aptr[out], aptr[out + 1]):
                    if orig_cap[j] - cap[j] > 0:
                        cap[j] += 1  # consume this unit so reruns skip it
                        w = ato[j]
                        if w == sink:
                            done = True
                        else:
                            v = w // 2
                            nodes[pos] = v
                            pos += 1
                            out = 2 * v + 1
                        advanced = True
                        break
                if not advanced:
                    done = True  # conservation guarantees we only stop at sink
            npaths += 1
            offsets[npaths] = pos
    return nodes[:pos], offsets[:npaths + 1]
