"""Exact radio numbers of small graphs.

Any radio labeling induces an order on the vertices, and for a fixed order
the greedy labeling (each vertex as low as the earlier ones allow) has the
least span. So rn(G) is the minimum greedy span over all p! orders. The
solver explores those orders depth first with bounding; the brute-force
routine enumerates every permutation and is kept as an independent check.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import GraphMatcher

from .graph import DistanceMatrix, Graph, GraphError
from .labeling import Labeling, greedy_min_span, is_radio_labeling
from .layers import best_lower_bound

PROVED = "proved-optimal"
EXHAUSTED = "budget-exhausted"


@dataclass
class SolverConfig:
    max_vertices: int = 12
    time_budget: float | None = None
    initial_upper_bound: int | None = None
    use_layer_bound: bool = True

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")


@dataclass
class SolveResult:
    rn: int | None
    witness: Labeling | None
    status: str
    lower: int
    upper: int | None
    nodes: int = 0

    def to_dict(self) -> dict:
        out = {"status": self.status, "rn": self.rn, "lower": self.lower, "upper": self.upper}
        if self.witness is not None:
            out["labels"] = {str(v): x for v, x in enumerate(self.witness.labels)}
            out["ordering"] = list(self.witness.ordering)
            out["span"] = self.witness.span
        return out


class _OutOfTime(Exception):
    pass


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Automorphism orbits, found by testing marked-vertex isomorphisms
    inside classes of an invariant refinement (degree and distance profile).
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.p))
    nxg.add_edges_from(g.edges)
    prof = {v: (g.degree(v), tuple(sorted(nx.single_source_shortest_path_length(nxg, v).values())))
            for v in range(g.p)}
    classes: dict = {}
    for v in range(g.p):
        classes.setdefault(prof[v], []).append(v)

    def same_orbit(u: int, v: int) -> bool:
        a, b = nxg.copy(), nxg.copy()
        nx.set_node_attributes(a, {w: w == u for w in a}, "mark")
        nx.set_node_attributes(b, {w: w == v for w in b}, "mark")
        return GraphMatcher(a, b, node_match=lambda x, y: x["mark"] == y["mark"]).is_isomorphic()

    orbits = []
    for members in classes.values():
        groups: list[list[int]] = []
        for v in members:
            for grp in groups:
                if same_orbit(grp[0], v):
                    grp.append(v)
                    break
            else:
                groups.append([v])
        orbits.extend(groups)
    return sorted(orbits)


def exact_radio_number(g: Graph, dm: DistanceMatrix, config: SolverConfig | None = None) -> SolveResult:
    """Branch and bound over vertex orders with incremental greedy labels.

    A partial order is abandoned once max(current label + vertices left,
    largest forced label of an unplaced vertex) reaches the incumbent.
    With ``use_layer_bound`` the search also stops as soon as the incumbent
    meets the best layer lower bound over centers of size <= 2.
    """
    cfg = config or SolverConfig()
    p = g.p
    if p > cfg.max_vertices and cfg.time_budget is None:
        raise GraphError(f"{p} vertices exceeds max_vertices={cfg.max_vertices}; set a time budget")
    if p == 1:
        return SolveResult(0, Labeling((0,), (0,)), PROVED, 0, 0)
    d1 = dm.diameter + 1
    dist = dm.dist
    lower = p - 1
    if cfg.use_layer_bound:
        lower = max(lower, best_lower_bound(g, dm, min(2, p)).bound)

    best_span = cfg.initial_upper_bound + 1 if cfg.initial_upper_bound is not None else None
    best_order: list[int] | None = None
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    nodes = 0
    order: list[int] = []
    placed = np.zeros(p, dtype=bool)

    def dfs(last_label: int, forced: np.ndarray) -> bool:
        # returns True when the incumbent has reached the lower bound
        nonlocal best_span, best_order, nodes
        nodes += 1
        if deadline is not None and nodes % 2048 == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        left = p - len(order)
        if left == 0:
            if best_span is None or last_label < best_span:
                best_span, best_order = last_label, list(order)
            return best_span <= lower
        free = np.flatnonzero(~placed)
        if best_span is not None:
            if max(last_label + left, int(forced[free].max())) >= best_span:
                return False
        cand = sorted(free.tolist(), key=lambda v: (-dist[order[-1], v], v))
        for v in cand:
            lab = int(forced[v])
            if best_span is not None and lab + left - 1 >= best_span:
                continue
            order.append(v)
            placed[v] = True
            done = dfs(lab, np.maximum(forced, lab + d1 - dist[v]))
            placed[v] = False
            order.pop()
            if done:
                return True
        return False

    status = PROVED
    try:
        for orbit in vertex_orbits(g):
            v = orbit[0]
            order.append(v)
            placed[v] = True
            done = dfs(0, d1 - dist[v].astype(np.int64))
            placed[v] = False
            order.pop()
            if done:
                break
    except _OutOfTime:
        status = EXHAUSTED

    witness = greedy_min_span(g, dm, best_order) if best_order is not None else None
    if witness is not None:
        assert is_radio_labeling(g, dm, witness).valid
    if status == PROVED:
        if witness is None:
            raise ValueError(f"no radio labeling with span <= {cfg.initial_upper_bound}")
        return SolveResult(witness.span, witness, PROVED, witness.span, witness.span, nodes)
    upper = witness.span if witness is not None else cfg.initial_upper_bound
    return SolveResult(None, witness, EXHAUSTED, lower, upper, nodes)


def brute_force_radio_number(g: Graph, dm: DistanceMatrix) -> int:
    """Minimum greedy span over all p! orders, without any pruning (p <= 8)."""
    p = g.p
    if p > 8:
        raise GraphError(f"brute force limited to 8 vertices, got {p}")
    if p == 1:
        return 0
    perms = np.array(list(itertools.permutations(range(p))), dtype=np.int64)
    d1 = dm.diameter + 1
    labels = np.zeros_like(perms)
    for i in range(1, p):
        cur = perms[:, i]
        need = labels[:, :i] + d1 - dm.dist[perms[:, :i], cur[:, None]]
        labels[:, i] = need.max(axis=1)
    return int(labels[:, -1].min())
