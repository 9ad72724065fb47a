import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from radiolab.exact import brute_force_radio_number
from radiolab.families import pw_center_vertices
from radiolab.graph import all_pairs_distances, build_graph, cartesian_product, complete, cycle, path, star, wheel
from radiolab.labeling import (
    Labeling, LabelingError, OrderingError, certify_optimal, check_labeling_conditions,
    check_ordering_conditions, greedy_min_span, is_radio_labeling, labeling_from_ordering,
)
from radiolab.layers import enumerate_candidate_centers, layer_decomposition, lower_bound

from conftest import connected_graphs
from goldens import TABLE1, TABLE2, golden

CASES = {"table1": (7, TABLE1, 206), "table2": (8, TABLE2, 263)}


@pytest.fixture(params=sorted(CASES))
def table_case(request):
    m, table, span = CASES[request.param]
    g = cartesian_product(path(m), wheel(7))
    labels, ordering = golden(table)
    return g, all_pairs_distances(g), pw_center_vertices(m, 7), labels, ordering, span


def test_table_labelings_are_radio(table_case):
    g, dm, _, labels, _, span = table_case
    rep = is_radio_labeling(g, dm, Labeling(tuple(labels)))
    assert rep.valid and rep.span == span and rep.violations == []


def test_path_consecutive_labels_invalid():
    g = path(3)
    rep = is_radio_labeling(g, all_pairs_distances(g), [0, 1, 2])
    assert not rep.valid
    assert (0, 1, 2, 1) in rep.violations and (1, 2, 2, 1) in rep.violations


def test_missing_label_rejected():
    g = path(3)
    with pytest.raises(LabelingError):
        is_radio_labeling(g, all_pairs_distances(g), [0, 3])


def test_labeling_from_table_ordering(table_case):
    g, dm, center, labels, ordering, span = table_case
    lab = labeling_from_ordering(g, dm, center, ordering)
    assert list(lab.labels) == labels
    assert lab.labels[ordering[1]] == 5
    assert lab.span == span and lab.ordering == tuple(ordering)


def test_labeling_from_ordering_two_vertices():
    g = build_graph(2, [(0, 1)])
    dm = all_pairs_distances(g)
    assert labeling_from_ordering(g, dm, [0, 1], [1, 0]).labels == (1, 0)
    assert labeling_from_ordering(g, dm, [0, 1], [0, 1]).labels == (0, 1)


def test_nonpositive_increment_rejected():
    g = path(5)
    dm = all_pairs_distances(g)
    with pytest.raises(OrderingError, match="non-positive"):
        labeling_from_ordering(g, dm, [0], [4, 3, 0, 1, 2])
    with pytest.raises(OrderingError, match="permutation"):
        labeling_from_ordering(g, dm, [0], [0, 1, 2, 3, 3])


def test_table_orderings_satisfy_conditions(table_case):
    g, dm, center, _, ordering, _ = table_case
    rep = check_ordering_conditions(g, dm, center, ordering)
    assert rep.holds
    assert rep.endpoint_sum == rep.required_endpoint_sum == (1 if len(center) == 1 else 0)


def test_reversed_path_ordering_violation():
    g = path(3)
    dm = all_pairs_distances(g)
    rep = check_ordering_conditions(g, dm, [0], [2, 1, 0])
    assert not rep.condition_b
    # positions 0,1 hold vertices 2,1 at distance 1 but the bound asks for 3
    assert rep.violations[0] == (0, 1, 1, 3)


def test_certify_tables(table_case):
    g, dm, center, labels, ordering, span = table_case
    cert = certify_optimal(g, dm, center, ordering)
    assert cert.certified and cert.bound.bound == span
    assert list(cert.labeling.labels) == labels and cert.verification.valid


def test_random_orderings_do_not_certify():
    g = cartesian_product(path(7), wheel(7))
    dm = all_pairs_distances(g)
    rng = random.Random(7)
    order = list(range(g.p))
    for _ in range(20):
        rng.shuffle(order)
        assert not certify_optimal(g, dm, pw_center_vertices(7, 7), order).certified


def test_labeling_conditions_on_tables(table_case):
    g, dm, center, labels, ordering, _ = table_case
    rep = check_labeling_conditions(g, dm, center, Labeling(tuple(labels)))
    assert rep.holds and rep.ordering == tuple(ordering)
    assert ordering[0] in center
    if len(center) == 2:
        assert ordering[-1] in center


def test_doubled_labels_break_increments(table_case):
    g, dm, center, labels, _, _ = table_case
    rep = check_labeling_conditions(g, dm, center, Labeling(tuple(2 * x for x in labels)))
    assert rep.radio and rep.consecutive_distance and rep.endpoints
    assert not rep.increments


def test_duplicate_labels_rejected():
    g = path(3)
    with pytest.raises(LabelingError):
        check_labeling_conditions(g, all_pairs_distances(g), [1], Labeling((0, 0, 3)))


def test_condition_checkers_agree_on_tables(table_case):
    g, dm, center, labels, _, _ = table_case
    lab = Labeling(tuple(labels))
    rep = check_labeling_conditions(g, dm, center, lab)
    order = lab.induced_ordering()
    assert rep.holds == check_ordering_conditions(g, dm, center, order).holds
    assert labeling_from_ordering(g, dm, center, order).labels == lab.labels


@pytest.mark.parametrize("g,order,labels", [
    (path(3), [0, 2, 1], (0, 3, 1)),
    (build_graph(2, [(0, 1)]), [0, 1], (0, 1)),
    (complete(3), [2, 0, 1], (1, 2, 0)),
])
def test_greedy_examples(g, order, labels):
    lab = greedy_min_span(g, all_pairs_distances(g), order)
    assert lab.labels == labels


@pytest.mark.parametrize("g", [path(4), cycle(4), star(3), path(5), cycle(5)])
def test_greedy_dominates_all_labelings_with_same_order(g):
    dm = all_pairs_distances(g)
    cap = brute_force_radio_number(g, dm) + 2
    best = {}
    for labels in itertools.permutations(range(cap + 1), g.p):
        if min(labels) != 0 or not is_radio_labeling(g, dm, labels).valid:
            continue
        order = Labeling(labels).induced_ordering()
        best[order] = min(best.get(order, cap + 1), max(labels))
    assert best
    for order, span in best.items():
        assert greedy_min_span(g, dm, order).span <= span


@settings(max_examples=300, deadline=None)
@given(connected_graphs(min_p=2, max_p=7), st.data())
def test_sufficiency_and_telescoping(g, data):
    dm = all_pairs_distances(g)
    center = data.draw(st.sampled_from(enumerate_candidate_centers(g, dm, min(2, g.p))))
    order = data.draw(st.permutations(range(g.p)))
    rep = check_ordering_conditions(g, dm, center, order)
    try:
        lab = labeling_from_ordering(g, dm, center, order)
    except OrderingError:
        assert not rep.holds
        return
    lay = layer_decomposition(g, dm, center)
    ends = lay.level[order[0]] + lay.level[order[-1]]
    assert lab.span == (g.p - 1) * (dm.diameter - center.k + 1) + ends - 2 * lay.total
    valid = is_radio_labeling(g, dm, lab).valid
    if rep.holds:
        assert valid and lab.span == lower_bound(g, dm, center).bound
    # the labeling is radio exactly when every pairwise inequality holds
    assert valid == rep.condition_b


def test_condition_necessity_small_graphs(small_catalog):
    """Whenever rn meets the layer bound for some center, an ordering meeting
    both conditions exists for that center."""
    checked = 0
    for g, dm in small_catalog:
        if g.p < 2:
            continue
        rn = brute_force_radio_number(g, dm)
        for c in enumerate_candidate_centers(g, dm, min(2, g.p)):
            if lower_bound(g, dm, c).bound != rn:
                continue
            assert any(check_ordering_conditions(g, dm, c, o).holds
                       for o in itertools.permutations(range(g.p)))
            checked += 1
    assert checked > 20
