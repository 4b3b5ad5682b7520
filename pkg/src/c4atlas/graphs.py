"""Simple undirected graphs with exact BFS-layer, diameter and C4 queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


class InvalidVertex(ValueError):
    pass


class Disconnected(ValueError):
    pass


class TooSmall(ValueError):
    pass


class SameVertex(ValueError):
    pass


class Graph:
    """Simple graph on vertices 0..n-1 with set adjacency.

    Instances are treated as immutable once built: constructions assemble
    an edge list and create a fresh Graph, queries never mutate.  The
    optional ``labels`` map names construction roles ("a", "c_3",
    "junction_2", ...) to vertex ids.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: dict[str, int] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.labels = dict(labels) if labels else {}
        for role, v in self.labels.items():
            if not 0 <= v < n:
                raise InvalidVertex(f"label {role}={v} out of range")

    # -- basic queries ------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range for n={self.n}")
        return v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        raise TypeError("graphs are not hashable; use a canonical form")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def relabeled(self, perm: list[int]) -> "Graph":
        """New graph with vertex v renamed perm[v]; labels carried along."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = {role: perm[v] for role, v in self.labels.items()}
        return Graph(self.n, edges, labels)


@dataclass(frozen=True)
class LayerProfile:
    """BFS layers from a root: sizes (n_0, ..., n_ecc) and the layer sets."""

    root: int
    sizes: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]
    complete: bool  # True iff the layers cover the whole graph

    @property
    def eccentricity(self) -> int:
        return len(self.sizes) - 1


def bfs_distances(g: Graph, u: int) -> list[int]:
    """Distance from u to every vertex; -1 where unreachable."""
    g.check_vertex(u)
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    adj = g.adj
    while queue:
        x = queue.popleft()
        dx = dist[x]
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def bfs_layers(g: Graph, u: int) -> LayerProfile:
    """Vertices grouped by exact distance from u, within u's component."""
    dist = bfs_distances(g, u)
    ecc = max(dist)
    layers = [[] for _ in range(ecc + 1)]
    reached = 0
    for v, d in enumerate(dist):
        if d >= 0:
            layers[d].append(v)
            reached += 1
    return LayerProfile(
        root=u,
        sizes=tuple(len(layer) for layer in layers),
        layers=tuple(tuple(layer) for layer in layers),
        complete=(reached == g.n),
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(-1) == 0


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex; raises Disconnected."""
    if g.n == 0:
        raise Disconnected("empty graph")
    out = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if -1 in dist:
            raise Disconnected("graph is not connected")
        out.append(max(dist))
    return out


def diameter(g: Graph) -> int:
    """Largest eccentricity, by all-sources BFS; errors on disconnected input."""
    return max(eccentricities(g))


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return g.adj[u] & g.adj[v]


def is_c4_free(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """C4-subgraph-freeness: no vertex pair with two common neighbors.

    On failure returns a witness (x, a, y, b) with a, b common neighbors
    of x, y, i.e. the 4-cycle x-a-y-b.  The witness is deterministic:
    middle vertices are scanned in increasing id order.
    """
    seen: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        nbrs = sorted(g.adj[w])
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1 :]:
                key = (x, y)
                first = seen.get(key)
                if first is not None:
                    return False, (x, first, y, w)
                seen[key] = w
    return True, None
