"""Exact edge- and vertex-connectivity with certificates.

Edge connectivity is Stoer-Wagner global min cut on unit weights,
cross-validated against max-flow values for small graphs.  Vertex
connectivity is the classic reduction to unit-capacity max flow on the
split-vertex digraph (Menger), minimized over a sound pair family.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, SameVertex, TooSmall


@dataclass(frozen=True)
class EdgeCut:
    value: int
    side: frozenset[int]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class VertexCut:
    value: int
    separator: frozenset[int] | None  # None for complete graphs


# ---------------------------------------------------------------------------
# Stoer-Wagner
# ---------------------------------------------------------------------------

def stoer_wagner(g: Graph) -> tuple[int, frozenset[int]]:
    """Global minimum edge cut (value, one side) on unit weights.

    Deterministic: every phase starts at the smallest active vertex and
    heap ties break on vertex id.
    """
    if g.n < 2:
        raise TooSmall("minimum cut needs at least 2 vertices")
    adj: dict[int, dict[int, int]] = {
        v: {u: 1 for u in g.adj[v]} for v in range(g.n)
    }
    members: dict[int, list[int]] = {v: [v] for v in range(g.n)}
    best_value = None
    best_side: frozenset[int] | None = None

    while len(adj) > 1:
        start = min(adj)
        in_a = {start}
        weights = {v: w for v, w in adj[start].items()}
        heap = [(-w, v) for v, w in weights.items()]
        heapq.heapify(heap)
        order = [start]
        last_w = 0
        while len(in_a) < len(adj):
            while True:
                if not heap:
                    # remaining vertices are disconnected from the A side
                    rest = min(v for v in adj if v not in in_a)
                    neg_w, v = 0, rest
                    break
                neg_w, v = heapq.heappop(heap)
                if v not in in_a and weights.get(v, 0) == -neg_w:
                    break
            in_a.add(v)
            order.append(v)
            last_w = -neg_w
            for u, w in adj[v].items():
                if u not in in_a:
                    nw = weights.get(u, 0) + w
                    weights[u] = nw
                    heapq.heappush(heap, (-nw, u))
        s, t = order[-2], order[-1]
        if best_value is None or last_w < best_value:
            best_value = last_w
            best_side = frozenset(members[t])
        # contract t into s
        for u, w in adj[t].items():
            if u == s:
                continue
            adj[s][u] = adj[s].get(u, 0) + w
            adj[u][s] = adj[u].get(s, 0) + w
            del adj[u][t]
        adj[s].pop(t, None)
        del adj[t]
        members[s].extend(members[t])
        del members[t]

    assert best_value is not None and best_side is not None
    return best_value, best_side


def cut_edges(g: Graph, side: frozenset[int]) -> tuple[tuple[int, int], ...]:
    return tuple(
        (u, v) for u, v in g.edges() if (u in side) != (v in side)
    )


# ---------------------------------------------------------------------------
# unit-capacity max flow, edge version (edge-disjoint paths)
# ---------------------------------------------------------------------------

def _edge_flow(
    g: Graph, s: int, t: int, limit: int | None = None
) -> tuple[int, list[dict[int, int]]]:
    """Edge-disjoint s-t path count via BFS augmentation; residual returned."""
    res: list[dict[int, int]] = [
        {u: 1 for u in sorted(g.adj[v])} for v in range(g.n)
    ]
    flow = 0
    while limit is None or flow < limit:
        parent = [-1] * g.n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            x = queue.popleft()
            for y, cap in res[x].items():
                if cap > 0 and parent[y] < 0:
                    parent[y] = x
                    queue.append(y)
        if parent[t] < 0:
            break
        v = t
        while v != s:
            u = parent[v]
            res[u][v] -= 1
            res[v][u] = res[v].get(u, 0) + 1
            v = u
        flow += 1
    return flow, res


def st_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of edge-disjoint s-t paths (= min s-t edge cut)."""
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise SameVertex("s and t must differ")
    return _edge_flow(g, s, t, limit)[0]


def _edge_connectivity_flow_value(g: Graph) -> int:
    """lambda by n-1 max flows from a fixed source (validation oracle)."""
    s = 0
    return min(_edge_flow(g, s, t)[0] for t in range(g.n) if t != s)


def edge_connectivity(g: Graph) -> EdgeCut:
    """Exact edge connectivity with a minimum-cut certificate.

    Uses Stoer-Wagner; for n <= 64 the value is additionally cross-checked
    against the flow oracle, so a disagreement (an implementation bug)
    cannot go unnoticed.
    """
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    value, side = stoer_wagner(g)
    if g.n <= 64:
        flow_value = _edge_connectivity_flow_value(g)
        if flow_value != value:
            raise RuntimeError(
                f"min-cut cross-validation failed: stoer-wagner={value}, "
                f"flow={flow_value}"
            )
    return EdgeCut(value=value, side=side, edges=cut_edges(g, side))


def edge_connectivity_at_least(g: Graph, k: int) -> bool:
    """Exact decision lambda(G) >= k via early-terminated Menger flows.

    Much cheaper than the full minimum cut on large graphs when only a
    threshold is needed.
    """
    if g.n < 2:
        raise TooSmall("edge connectivity needs at least 2 vertices")
    if k <= 0:
        return True
    if g.min_degree() < k:
        return False
    s = min(range(g.n), key=lambda v: (g.degree(v), v))
    for t in range(g.n):
        if t != s and _edge_flow(g, s, t, limit=k)[0] < k:
            return False
    return True


# ---------------------------------------------------------------------------
# vertex connectivity via the split-vertex digraph
# ---------------------------------------------------------------------------

def _vertex_flow(
    g: Graph, s: int, t: int, limit: int | None = None
) -> tuple[int, dict[int, dict[int, int]]]:
    """Internally vertex-disjoint s-t path count.

    Node 2v is v_in, 2v+1 is v_out; each v other than s, t carries a
    capacity-1 internal arc, every edge {u,v} the arcs u_out->v_in and
    v_out->u_in.  Source is s_out, sink t_in.
    """
    res: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, cap: int) -> None:
        res.setdefault(a, {})[b] = cap
        res.setdefault(b, {}).setdefault(a, 0)

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
        for u in sorted(g.adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while limit is None or flow < limit:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, cap in res[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        v = sink
        while v != source:
            u = parent[v]
            res[u][v] -= 1
            res[v][u] += 1
            v = u
        flow += 1
    return flow, res


def _vertex_cut_from_residual(
    g: Graph, s: int, t: int, res: dict[int, dict[int, int]]
) -> frozenset[int]:
    """Minimum s-t separator: v with v_in reachable but v_out not."""
    source = 2 * s + 1
    reach = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, cap in res[x].items():
            if cap > 0 and y not in reach:
                reach.add(y)
                queue.append(y)
    return frozenset(
        v
        for v in range(g.n)
        if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach
    )


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    For adjacent s, t this is computed on G minus the edge st, plus one.
    """
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise SameVertex("s and t must differ")
    if g.has_edge(s, t):
        reduced = Graph(g.n, [e for e in g.edges() if set(e) != {s, t}])
        return _vertex_flow(reduced, s, t)[0] + 1
    return _vertex_flow(g, s, t)[0]


def min_vertex_cut(g: Graph, s: int, t: int) -> frozenset[int]:
    """A minimum s-t separator for nonadjacent s, t."""
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t:
        raise SameVertex("s and t must differ")
    if g.has_edge(s, t):
        raise ValueError("no vertex separator exists for adjacent vertices")
    _, res = _vertex_flow(g, s, t)
    return _vertex_cut_from_residual(g, s, t, res)


def vertex_connectivity(g: Graph) -> VertexCut:
    """Exact vertex connectivity with a minimum separator certificate.

    Complete graphs return n-1 by convention (no separator exists).
    Otherwise kappa is the minimum of local connectivities over a fixed
    minimum-degree vertex s against all its non-neighbors, and over all
    nonadjacent pairs inside N(s); this pair family is exact.
    """
    if g.n < 2:
        raise TooSmall("vertex connectivity needs at least 2 vertices")
    if all(len(g.adj[v]) == g.n - 1 for v in range(g.n)):
        return VertexCut(value=g.n - 1, separator=None)
    s = min(range(g.n), key=lambda v: (g.degree(v), v))
    best_value: int | None = None
    best_pair: tuple[int, int] | None = None
    candidates: list[tuple[int, int]] = []
    for t in range(g.n):
        if t != s and not g.has_edge(s, t):
            candidates.append((s, t))
    nbrs = sorted(g.adj[s])
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if not g.has_edge(x, y):
                candidates.append((x, y))
    for x, y in candidates:
        limit = best_value if best_value is not None else None
        value, _ = _vertex_flow(g, x, y, limit=limit)
        if best_value is None or value < best_value:
            best_value = value
            best_pair = (x, y)
    assert best_value is not None and best_pair is not None
    _, res = _vertex_flow(g, *best_pair)
    separator = _vertex_cut_from_residual(g, *best_pair, res)
    return VertexCut(value=best_value, separator=separator)
