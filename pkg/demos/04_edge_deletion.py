"""Delete edges of P_7 □ W_7 down to a level-preserving spanning tree.

The same ordering stays optimal at every step. The same idea carries the
wheel labeling over to P_m □ K_{1,n} and P_m □ F_n. The last part shows that
such a tree can have a larger diameter than its parent graph.
"""
from __future__ import annotations

from radiolab import FamilySpec, build_family, cycle, all_pairs_distances
from radiolab.families import pw_center_vertices
from radiolab.reductions import check_observation, edge_deletion_sequence, inherited_deletion_sequence, mdst

res = build_family(FamilySpec("path-wheel", 7, 7))
center = pw_center_vertices(7, 7)
tree = mdst(res.graph, res.distances, center)
seq = edge_deletion_sequence(res.graph, tree, center, res.ordering)
spans = {s.span for s in seq.steps}
print(f"P_7 □ W_7: {len(seq.steps)} deletions, all certified {seq.all_certified}, spans seen {spans}")
print(check_observation(res.graph, tree, center))

for family, m, n in [("path-star", 5, 8), ("path-friendship", 6, 4)]:
    s = inherited_deletion_sequence(family, m, n)
    print(f"{family} ({m}, {n}): {len(s.steps)} deletions, span {s.initial_span}, "
          f"constant {s.constant_span}, certified {s.all_certified}")

c5 = cycle(5)
rep = check_observation(c5, mdst(c5, all_pairs_distances(c5), (0,)), (0,))
print(f"C_5 rooted at 0: diameters (graph, tree) = {rep.diameters}, witness {rep.witnesses['a']}")
