"""Spanning subgraphs rooted at a center set and edge-deletion sequences."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances, induced_subgraph, spanning_subgraph
from .labeling import certify_optimal
from .layers import CenterSet, layer_decomposition, make_center


@dataclass(frozen=True)
class RootedSpanningSubgraph:
    parent_graph: Graph
    kept_edges: tuple[tuple[int, int], ...]
    root_set: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return spanning_subgraph(self.parent_graph, self.kept_edges)

    def surplus_edges(self) -> list[tuple[int, int]]:
        kept = set(self.kept_edges)
        return [e for e in self.parent_graph.edges if e not in kept]


def _vertices(center) -> tuple[int, ...]:
    # a CenterSet caches k for one graph; subgraphs must recompute it
    return center.vertices if isinstance(center, CenterSet) else tuple(center)


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def rooted_subgraph(g: Graph, edges, root_set) -> RootedSpanningSubgraph:
    """Wrap an arbitrary spanning subgraph of ``g`` (e.g. P_m □ K_{1,n} inside P_m □ W_n)."""
    kept = tuple(sorted({_norm(u, v) for u, v in edges}))
    for e in kept:
        if not g.has_edge(*e):
            raise GraphError(f"{e} is not an edge of the parent graph")
    return RootedSpanningSubgraph(g, kept, tuple(sorted(root_set)))


def mdst(g: Graph, dm: DistanceMatrix, center, parent_rule: str = "smallest") -> RootedSpanningSubgraph:
    """Spanning tree rooted at the center set that keeps every vertex level.

    Keeps all edges inside the center set, and for each vertex at level
    i >= 1 exactly one edge to a level-(i-1) neighbour: the one with the
    smallest id (``parent_rule="largest"`` picks the largest instead).
    """
    c = make_center(g, dm, _vertices(center))
    sub, ids = induced_subgraph(g, c.vertices)
    if not sub.connected:
        raise GraphError("center set does not induce a connected subgraph")
    pick = {"smallest": min, "largest": max}[parent_rule]
    level = layer_decomposition(g, dm, c).level
    kept = {(ids[a], ids[b]) for a, b in sub.edges}
    for v in range(g.p):
        if level[v] == 0:
            continue
        par = pick(w for w in g.adjacency[v] if level[w] == level[v] - 1)
        kept.add(_norm(v, par))
    return RootedSpanningSubgraph(g, tuple(sorted(kept)), c.vertices)


@dataclass
class ObservationReport:
    diameter_preserved: bool
    levels_preserved: bool
    total_preserved: bool
    distances_dominate: bool
    diameters: tuple[int, int]
    witnesses: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (self.diameter_preserved and self.levels_preserved
                and self.total_preserved and self.distances_dominate)


def check_observation(g: Graph, t: Graph | RootedSpanningSubgraph, center) -> ObservationReport:
    """Compare a spanning subgraph T against G.

    (a) diam(T) = diam(G); (b) d_T(u, L0) = d_G(u, L0); (c) L(T) = L(G);
    (d) d_T(u, v) >= d_G(u, v). Failures carry a witness.
    """
    if isinstance(t, RootedSpanningSubgraph):
        t = t.graph
    center = _vertices(center)
    if t.p != g.p:
        raise GraphError("subgraph does not span the parent's vertex set")
    dg = all_pairs_distances(g)
    if not t.connected:
        raise GraphError("spanning subgraph is disconnected")
    dt = all_pairs_distances(t)
    cg = make_center(g, dg, center)
    lg = layer_decomposition(g, dg, cg)
    lt = layer_decomposition(t, dt, make_center(t, dt, center))
    wit = {}
    a = dt.diameter == dg.diameter
    if not a:
        u, v = np.unravel_index(int(dt.dist.argmax()), dt.dist.shape)
        wit["a"] = (int(u), int(v), int(dt.dist[u, v]), int(dg.dist[u, v]))
    b = lt.level == lg.level
    if not b:
        u = next(i for i in range(g.p) if lt.level[i] != lg.level[i])
        wit["b"] = (u, lt.level[u], lg.level[u])
    c = lt.total == lg.total
    less = np.argwhere(dt.dist < dg.dist)
    d = len(less) == 0
    if not d:
        u, v = less[0]
        wit["d"] = (int(u), int(v), int(dt.dist[u, v]), int(dg.dist[u, v]))
    return ObservationReport(a, b, c, d, (dg.diameter, dt.diameter), wit)


@dataclass
class DeletionStep:
    deleted_edge: tuple[int, int]
    certified: bool
    span: int | None
    bound: int
    diameter: int

    def to_dict(self) -> dict:
        return {"deleted_edge": list(self.deleted_edge), "certified": self.certified,
                "span": self.span, "bound": self.bound, "diameter": self.diameter}


@dataclass
class DeletionSequence:
    initial_certified: bool
    initial_span: int | None
    steps: list[DeletionStep]

    @property
    def all_certified(self) -> bool:
        return self.initial_certified and all(s.certified for s in self.steps)

    @property
    def constant_span(self) -> bool:
        return all(s.span == self.initial_span for s in self.steps)

    def to_dict(self) -> dict:
        return {"initial_certified": self.initial_certified, "initial_span": self.initial_span,
                "all_certified": self.all_certified, "constant_span": self.constant_span,
                "steps": [s.to_dict() for s in self.steps]}


def edge_deletion_sequence(g: Graph, target: RootedSpanningSubgraph, center,
                           ordering: Sequence[int]) -> DeletionSequence:
    """Delete the surplus edges of ``g`` one at a time, in lexicographic order,
    re-certifying the same ordering after every deletion.
    """
    kept = set(target.kept_edges)
    surplus = sorted(e for e in g.edges if e not in kept)
    if len(kept) + len(surplus) != g.num_edges:
        raise GraphError("target keeps edges that are not in the graph")
    center = _vertices(center)
    dm = all_pairs_distances(g)
    first = certify_optimal(g, dm, center, ordering)
    remaining = set(g.edges)
    steps = []
    for e in surplus:
        remaining.discard(e)
        gi = spanning_subgraph(g, remaining)
        assert gi.connected, f"deleting {e} disconnected the graph"
        di = all_pairs_distances(gi)
        cert = certify_optimal(gi, di, center, ordering)
        span = cert.labeling.span if cert.certified else None
        steps.append(DeletionStep(e, cert.certified, span, cert.bound.bound, di.diameter))
    span0 = first.labeling.span if first.certified else None
    return DeletionSequence(first.certified, span0, steps)


def inherited_deletion_sequence(family: str, m: int, n: int, literal: bool = False) -> DeletionSequence:
    """Delete rim edges of P_m □ W_n (star) or P_m □ W_{2n} (friendship) down to
    the subfamily product, re-certifying the wheel ordering at every step.
    """
    from .families import FamilySpec, family_graph, pw_center_vertices, pw_ordering

    wheel_n = {"path-star": n, "path-friendship": 2 * n}.get(family)
    if wheel_n is None:
        raise GraphError(f"{family} does not inherit from a wheel product")
    parent = family_graph(FamilySpec("path-wheel", m, wheel_n))
    child = family_graph(FamilySpec(family, m, n))
    center = pw_center_vertices(m, wheel_n)
    target = rooted_subgraph(parent, child.edges, center)
    return edge_deletion_sequence(parent, target, center, pw_ordering(m, wheel_n, literal))
