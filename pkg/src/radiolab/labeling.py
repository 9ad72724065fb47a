"""Radio labelings: verification, labelings generated from vertex orderings,
and the two optimality-condition checkers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import DistanceMatrix, Graph
from .layers import BoundReport, CenterSet, layer_decomposition, lower_bound, make_center

MAX_REPORTED = 20


class LabelingError(ValueError):
    pass


class OrderingError(LabelingError):
    pass


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]
    ordering: tuple[int, ...] | None = None

    def __post_init__(self):
        if any(int(x) < 0 for x in self.labels):
            raise LabelingError("labels must be non-negative")

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def induced_ordering(self) -> tuple[int, ...]:
        if len(set(self.labels)) != len(self.labels):
            raise LabelingError("labels are not distinct; no induced ordering")
        return tuple(sorted(range(len(self.labels)), key=self.labels.__getitem__))


@dataclass
class VerificationReport:
    valid: bool
    span: int
    violations: list[tuple[int, int, int, int]] = field(default_factory=list)
    num_violations: int = 0


def _check_permutation(g: Graph, ordering: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(v) for v in ordering)
    if sorted(order) != list(range(g.p)):
        raise OrderingError("ordering is not a permutation of the vertex set")
    return order


def _center(g, dm, center) -> CenterSet:
    return center if isinstance(center, CenterSet) else make_center(g, dm, center)


def is_radio_labeling(g: Graph, dm: DistanceMatrix, labeling: Labeling | Sequence[int]) -> VerificationReport:
    """Check |f(u) - f(v)| >= diam + 1 - d(u, v) over every unordered pair.

    Violations are ``(u, v, required_gap, actual_gap)``, capped at 20 entries.
    """
    labels = labeling.labels if isinstance(labeling, Labeling) else tuple(labeling)
    if len(labels) != g.p or any(x is None for x in labels):
        raise LabelingError(f"labeling must cover all {g.p} vertices")
    f = np.asarray(labels, dtype=np.int64)
    iu, ju = np.triu_indices(g.p, 1)
    required = dm.diameter + 1 - dm.dist[iu, ju]
    actual = np.abs(f[iu] - f[ju])
    bad = np.flatnonzero(actual < required)
    viol = [(int(iu[t]), int(ju[t]), int(required[t]), int(actual[t]))
            for t in bad[:MAX_REPORTED]]
    span = int(f.max() - f.min())
    return VerificationReport(len(bad) == 0, span, viol, int(len(bad)))


def _step_costs(dm: DistanceMatrix, level: np.ndarray, order: np.ndarray, k: int) -> np.ndarray:
    """d + 1 - d(x_t, L0) - d(x_{t+1}, L0) - k for each consecutive pair."""
    return dm.diameter + 1 - level[order[:-1]] - level[order[1:]] - k


def labeling_from_ordering(g: Graph, dm: DistanceMatrix, center, ordering: Sequence[int]) -> Labeling:
    """f(x_0) = 0, f(x_{i+1}) = f(x_i) + d + 1 - d(x_i,L0) - d(x_{i+1},L0) - k.

    Raises OrderingError if some increment is not positive.
    """
    c = _center(g, dm, center)
    order = np.asarray(_check_permutation(g, ordering))
    level = np.asarray(layer_decomposition(g, dm, c).level)
    steps = _step_costs(dm, level, order, c.k)
    if (steps < 1).any():
        i = int(np.flatnonzero(steps < 1)[0])
        raise OrderingError(
            f"non-positive increment {int(steps[i])} between positions {i} and {i + 1}")
    labels = np.zeros(g.p, dtype=np.int64)
    labels[order[1:]] = np.cumsum(steps)
    return Labeling(tuple(int(x) for x in labels), tuple(int(v) for v in order))


@dataclass
class OrderingReport:
    condition_a: bool
    endpoint_sum: int
    required_endpoint_sum: int
    condition_b: bool
    violations: list[tuple[int, int, int, int]] = field(default_factory=list)
    num_violations: int = 0

    @property
    def holds(self) -> bool:
        return self.condition_a and self.condition_b


def check_ordering_conditions(g: Graph, dm: DistanceMatrix, center, ordering: Sequence[int]) -> OrderingReport:
    """Endpoint-level condition (a) and the all-pairs distance condition (b).

    (b) requires, for every i < j,
    d(x_i, x_j) >= sum_{t=i}^{j-1} (d(x_t,L0) + d(x_{t+1},L0) + k - d - 1) + d + 1,
    evaluated for all O(p^2) pairs from prefix sums. Violations are reported
    as ``(i, j, distance, required)`` with positions into the ordering.
    """
    c = _center(g, dm, center)
    order = np.asarray(_check_permutation(g, ordering))
    level = np.asarray(layer_decomposition(g, dm, c).level)
    d = dm.diameter
    ends = int(level[order[0]] + level[order[-1]])
    want = 1 if len(c) == 1 else 0

    terms = -_step_costs(dm, level, order, c.k)
    prefix = np.concatenate([[0], np.cumsum(terms)])
    required = prefix[None, :] - prefix[:, None] + d + 1
    actual = dm.dist[np.ix_(order, order)]
    mask = np.triu(actual < required, 1)
    ii, jj = np.nonzero(mask)
    viol = [(int(i), int(j), int(actual[i, j]), int(required[i, j]))
            for i, j in zip(ii[:MAX_REPORTED], jj[:MAX_REPORTED])]
    return OrderingReport(ends == want, ends, want, len(ii) == 0, viol, int(len(ii)))


@dataclass
class Certificate:
    labeling: Labeling | None
    bound: BoundReport
    conditions: OrderingReport
    verification: VerificationReport | None
    certified: bool

    def to_dict(self) -> dict:
        return {
            "certified": self.certified,
            "bound": self.bound.to_dict(),
            "condition_a": self.conditions.condition_a,
            "condition_b": self.conditions.condition_b,
            "endpoint_level_sum": self.conditions.endpoint_sum,
            "violations": [list(v) for v in self.conditions.violations],
        }


def certify_optimal(g: Graph, dm: DistanceMatrix, center, ordering: Sequence[int]) -> Certificate:
    """Certify rn(G) = bound via the ordering conditions.

    When both conditions hold, the generated labeling must be a radio labeling
    whose span equals the layer bound; anything else is an internal error.
    """
    c = _center(g, dm, center)
    bound = lower_bound(g, dm, c)
    conds = check_ordering_conditions(g, dm, c, ordering)
    try:
        lab = labeling_from_ordering(g, dm, c, ordering)
    except OrderingError:
        lab = None
    ver = is_radio_labeling(g, dm, lab) if lab is not None else None
    certified = conds.holds
    if certified:
        if lab is None or not ver.valid or lab.span != bound.bound:
            raise AssertionError("ordering conditions hold but the labeling is not optimal")
    return Certificate(lab, bound, conds, ver, certified)


@dataclass
class LabelingConditionReport:
    consecutive_distance: bool
    endpoints: bool
    increments: bool
    radio: bool
    ordering: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.consecutive_distance and self.endpoints and self.increments and self.radio


def check_labeling_conditions(g: Graph, dm: DistanceMatrix, center, labeling: Labeling) -> LabelingConditionReport:
    """Conditions on a labeling with distinct labels, read along its label order.

    consecutive_distance: d(x_i,x_{i+1}) = d(x_i,L0) + d(x_{i+1},L0) + k
    endpoints: x_0, x_{p-1} in L0 when |L0| >= 2; x_0 in L0 and x_{p-1} in L1 when |L0| = 1
    increments: f(x_0) = 0 and every gap equals d + 1 - d(x_i,L0) - d(x_{i+1},L0) - k
    """
    c = _center(g, dm, center)
    order = np.asarray(labeling.induced_ordering())
    level = np.asarray(layer_decomposition(g, dm, c).level)
    consec = dm.dist[order[:-1], order[1:]]
    a = bool((consec == level[order[:-1]] + level[order[1:]] + c.k).all())
    first, last = level[order[0]], level[order[-1]]
    b = (first == 0 and last == 0) if len(c) >= 2 else (first == 0 and last == 1)
    f = np.asarray(labeling.labels)
    gaps = np.diff(f[order])
    cc = f[order[0]] == 0 and bool((gaps == _step_costs(dm, level, order, c.k)).all())
    radio = is_radio_labeling(g, dm, labeling).valid
    return LabelingConditionReport(a, bool(b), bool(cc), radio, tuple(int(v) for v in order))


def greedy_min_span(g: Graph, dm: DistanceMatrix, ordering: Sequence[int]) -> Labeling:
    """Smallest labels consistent with a fixed label order.

    f(x_0) = 0 and f(x_i) = max_{j<i} f(x_j) + d + 1 - d(x_j, x_i).
    """
    order = _check_permutation(g, ordering)
    d1 = dm.diameter + 1
    labels = np.zeros(g.p, dtype=np.int64)
    placed = np.asarray(order)
    for i in range(1, g.p):
        v = order[i]
        prev = placed[:i]
        labels[v] = int((labels[prev] + d1 - dm.dist[prev, v]).max())
    return Labeling(tuple(int(x) for x in labels), order)
