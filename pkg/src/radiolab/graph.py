"""Simple undirected graphs on dense integer ids, standard generators and
all-pairs hop distances.

Vertices are ``0..p-1``.  Display names such as ``"(u_4,v_0)"`` live in a
side table and never act as identity.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


class GraphError(ValueError):
    """Raised for malformed graphs or generator parameters."""


@dataclass(frozen=True)
class Graph:
    p: int
    adjacency: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None
    connected: bool = True

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.p) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def _is_connected(p: int, adjacency: Sequence[Sequence[int]]) -> bool:
    if p == 0:
        return False
    seen = [False] * p
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == p


def build_graph(
    p: int,
    edges: Iterable[tuple[int, int]],
    names: Sequence[str] | None = None,
    strict: bool = False,
    require_connected: bool = True,
) -> Graph:
    """Build a simple graph on ``p`` vertices.

    Self-loops always raise.  Duplicate edges raise when ``strict`` is set
    and otherwise emit a warning and are dropped.  Disconnected graphs raise
    unless ``require_connected`` is False, in which case the result carries
    ``connected=False``.
    """
    if p < 1:
        raise GraphError(f"vertex count must be positive, got {p}")
    nbrs: list[set[int]] = [set() for _ in range(p)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < p and 0 <= v < p):
            raise GraphError(f"edge ({u}, {v}) out of range for p={p}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            if strict:
                raise GraphError(f"duplicate edge ({u}, {v})")
            warnings.warn(f"duplicate edge ({u}, {v}) ignored", stacklevel=2)
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    if names is not None:
        if len(names) != p:
            raise GraphError(f"expected {p} names, got {len(names)}")
        names = tuple(names)
    connected = _is_connected(p, adjacency)
    if require_connected and not connected:
        raise GraphError("graph is disconnected")
    return Graph(p, adjacency, names, connected)


# -- generators --------------------------------------------------------------

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(m: int) -> Graph:
    """P_m with u_1..u_m at indices 0..m-1."""
    _require(m >= 1, f"path needs m >= 1, got {m}")
    return build_graph(m, [(i, i + 1) for i in range(m - 1)],
                       names=[f"u_{i + 1}" for i in range(m)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                       names=[f"v_{i + 1}" for i in range(n)])


def _hub_names(count: int) -> list[str]:
    return [f"v_{j}" for j in range(count)]


def wheel(n: int) -> Graph:
    """W_n: hub v_0 at index 0, rim v_1..v_n with v_n adjacent to v_1."""
    _require(n >= 3, f"wheel needs n >= 3, got {n}")
    edges = [(0, j) for j in range(1, n + 1)]
    edges += [(j, j + 1) for j in range(1, n)] + [(1, n)]
    return build_graph(n + 1, edges, names=_hub_names(n + 1))


def star(n: int) -> Graph:
    """K_{1,n}: hub v_0 at index 0, leaves v_1..v_n."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return build_graph(n + 1, [(0, j) for j in range(1, n + 1)],
                       names=_hub_names(n + 1))


def friendship(n: int) -> Graph:
    """F_n: hub v_0 joined to v_1..v_{2n}, plus the triangle edges v_{2i-1}v_{2i}.

    Every edge of F_n is an edge of W_{2n} under the same indexing.
    """
    _require(n >= 1, f"friendship graph needs n >= 1, got {n}")
    edges = [(0, j) for j in range(1, 2 * n + 1)]
    edges += [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    return build_graph(2 * n + 1, edges, names=_hub_names(2 * n + 1))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (a, b) at index ``a * h.p + b``."""
    q = h.p
    edges = []
    for a in range(g.p):
        for b in range(q):
            here = a * q + b
            edges.extend((here, a * q + c) for c in h.adjacency[b] if c > b)
            edges.extend((here, c * q + b) for c in g.adjacency[a] if c > a)
    names = [f"({g.name(a)},{h.name(b)})" for a in range(g.p) for b in range(q)]
    return build_graph(g.p * q, edges, names=names,
                       require_connected=g.connected and h.connected)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G(S)`` relabelled to ``0..|S|-1`` plus the original ids in order.

    The result may be disconnected; check ``.connected``.
    """
    keep = sorted(set(int(v) for v in vertices))
    if not keep:
        raise GraphError("induced subgraph of an empty vertex set")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[w]) for u in keep for w in g.adjacency[u]
             if w in index and u < w]
    names = [g.name(v) for v in keep] if g.names is not None else None
    return build_graph(len(keep), edges, names=names, require_connected=False), keep


def spanning_subgraph(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on all of ``V(G)`` keeping only ``edges`` (which must be edges of G)."""
    kept = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the parent graph")
        kept.append((u, v))
    return build_graph(g.p, kept, names=g.names, require_connected=False)


# -- distances ---------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    dist: np.ndarray = field(repr=False)
    diameter: int

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def to_set(self, u: int, s: Iterable[int]) -> int:
        return int(min(self.dist[u, w] for w in s))


def bfs_from(g: Graph, sources: Iterable[int]) -> list[int]:
    """Hop distance from the source set to every vertex (-1 if unreachable)."""
    level = [-1] * g.p
    queue = deque()
    for s in sources:
        if level[s] < 0:
            level[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if level[w] < 0:
                level[w] = level[u] + 1
                queue.append(w)
    return level


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances for a connected graph.

    Runs unweighted BFS from every source through scipy's csgraph routines.
    """
    if not g.connected:
        raise GraphError("distances requested on a disconnected graph")
    if g.p == 1:
        return DistanceMatrix(np.zeros((1, 1), dtype=np.int64), 0)
    rows, cols = [], []
    for u, nb in enumerate(g.adjacency):
        rows.extend([u] * len(nb))
        cols.extend(nb)
    adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.p, g.p))
    d = shortest_path(adj, directed=False, unweighted=True)
    dist = d.astype(np.int64)
    return DistanceMatrix(dist, int(dist.max()))
