"""Level structure around a center set and the layer lower bound on rn(G)."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError, bfs_from, induced_subgraph

DEFAULT_MAX_CENTER_SIZE = 4


@dataclass(frozen=True)
class CenterSet:
    vertices: tuple[int, ...]
    k: int
    connected_induced: bool

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class LayerDecomposition:
    level: tuple[int, ...]
    h: int
    layer_sizes: tuple[int, ...]
    total: int
    delta: int


@dataclass(frozen=True)
class BoundReport:
    p: int
    d: int
    k: int
    delta: int
    total: int
    bound: int
    center: tuple[int, ...]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["L"] = out.pop("total")
        out["center"] = list(self.center)
        return out


def make_center(g: Graph, dm: DistanceMatrix, vertices: Iterable[int]) -> CenterSet:
    vs = tuple(sorted(set(int(v) for v in vertices)))
    if not vs:
        raise GraphError("center set must be nonempty")
    if vs[0] < 0 or vs[-1] >= g.p:
        raise GraphError(f"center vertex out of range: {vs}")
    sub, _ = induced_subgraph(g, vs)
    k = int(dm.dist[np.ix_(vs, vs)].max())
    return CenterSet(vs, k, sub.connected)


def _as_center(g, dm, center) -> CenterSet:
    return center if isinstance(center, CenterSet) else make_center(g, dm, center)


def layer_decomposition(g: Graph, dm: DistanceMatrix, center) -> LayerDecomposition:
    """Layers L_0 = center, L_{i+1} = N(L_i); levels found by multi-source BFS."""
    c = _as_center(g, dm, center)
    level = bfs_from(g, c.vertices)
    h = max(level)
    sizes = [0] * (h + 1)
    for lv in level:
        sizes[lv] += 1
    total = sum(i * s for i, s in enumerate(sizes))
    delta = 1 if len(c) == 1 else 0
    return LayerDecomposition(tuple(level), h, tuple(sizes), total, delta)


@dataclass(frozen=True)
class DecompositionCheck:
    holds: bool
    equality_pairs: list[tuple[int, int]]
    violations: list[tuple[int, int]]


def distance_decomposition_check(g: Graph, dm: DistanceMatrix, center) -> DecompositionCheck:
    """Check d(u,v) <= d(u,L0) + d(v,L0) + diam(L0) for every unordered pair.

    Returns the pairs ``u < v`` where equality holds; these are the only
    pairs that may sit next to each other in an ordering that attains the
    bound.
    """
    c = _as_center(g, dm, center)
    lv = np.asarray(layer_decomposition(g, dm, c).level)
    rhs = lv[:, None] + lv[None, :] + c.k
    iu, ju = np.triu_indices(g.p, 1)
    lhs = dm.dist[iu, ju]
    r = rhs[iu, ju]
    eq = lhs == r
    bad = lhs > r
    return DecompositionCheck(
        holds=not bad.any(),
        equality_pairs=list(zip(iu[eq].tolist(), ju[eq].tolist())),
        violations=list(zip(iu[bad].tolist(), ju[bad].tolist())),
    )


def lower_bound(g: Graph, dm: DistanceMatrix, center) -> BoundReport:
    """(p-1)(d-k+1) + delta - 2 L(G) for the given center set."""
    c = _as_center(g, dm, center)
    lay = layer_decomposition(g, dm, c)
    d = dm.diameter
    bound = (g.p - 1) * (d - c.k + 1) + lay.delta - 2 * lay.total
    return BoundReport(g.p, d, c.k, lay.delta, lay.total, bound, c.vertices)


def enumerate_candidate_centers(g: Graph, dm: DistanceMatrix,
                                max_size: int = DEFAULT_MAX_CENTER_SIZE) -> list[CenterSet]:
    """All vertex sets of size <= max_size inducing a connected subgraph.

    Sorted by size, then lexicographically.
    """
    if max_size < 1:
        raise GraphError("max_size must be at least 1")
    if max_size > g.p:
        raise GraphError(f"max_size {max_size} exceeds vertex count {g.p}")
    found: set[tuple[int, ...]] = set()

    # grow each set from its smallest vertex, only ever adding larger ids
    def grow(current: frozenset, frontier: frozenset, root: int) -> None:
        found.add(tuple(sorted(current)))
        if len(current) == max_size:
            return
        for w in frontier:
            nxt = current | {w}
            key = tuple(sorted(nxt))
            if key in found:
                continue
            new_frontier = (frontier | {x for x in g.adjacency[w] if x > root}) - nxt
            grow(nxt, frozenset(new_frontier), root)

    for v in range(g.p):
        grow(frozenset([v]), frozenset(x for x in g.adjacency[v] if x > v), v)
    ordered = sorted(found, key=lambda s: (len(s), s))
    return [make_center(g, dm, s) for s in ordered]


def best_lower_bound(g: Graph, dm: DistanceMatrix,
                     max_size: int = DEFAULT_MAX_CENTER_SIZE) -> BoundReport:
    best = None
    # candidates arrive sorted by (size, lex), so strict > keeps the tie-break
    for c in enumerate_candidate_centers(g, dm, min(max_size, g.p)):
        rep = lower_bound(g, dm, c)
        if best is None or rep.bound > best.bound:
            best = rep
    return best
