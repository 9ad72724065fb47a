"""Radio labelings of graphs.

Layer lower bounds, ordering-based optimality certificates, explicit optimal
labelings of P_m □ W_n and its star and friendship relatives, edge-deletion
reductions and an exact solver for small graphs.
"""
from .graph import (
    DistanceMatrix, Graph, GraphError, all_pairs_distances, build_graph, cartesian_product,
    complete, cycle, friendship, induced_subgraph, path, star, wheel,
)
from .layers import (
    BoundReport, CenterSet, LayerDecomposition, best_lower_bound, distance_decomposition_check,
    enumerate_candidate_centers, layer_decomposition, lower_bound, make_center,
)
from .labeling import (
    Labeling, LabelingError, OrderingError, certify_optimal, check_labeling_conditions,
    check_ordering_conditions, greedy_min_span, is_radio_labeling, labeling_from_ordering,
)
from .families import (
    FamilySpec, alpha, build_family, complete_radio_number, friendship_radio_number,
    pw_center, pw_ordering, pw_radio_number, sigma, sigma_repaired, star_radio_number, tau,
)
from .reductions import check_observation, edge_deletion_sequence, inherited_deletion_sequence, mdst
from .exact import SolverConfig, brute_force_radio_number, exact_radio_number

__version__ = "0.1.0"
