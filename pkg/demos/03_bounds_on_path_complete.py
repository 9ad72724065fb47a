"""How the choice of center set moves the layer bound on P_m □ K_n.

For P_4 □ K_3 small centers give weak bounds. Taking both middle copies of
K_3 as the center gives 21, which the exact solver confirms is rn. For odd m
the single middle copy gives a bound one below the known radio number.
"""
from __future__ import annotations

from radiolab import FamilySpec, all_pairs_distances, best_lower_bound, complete_radio_number
from radiolab.exact import SolverConfig, exact_radio_number
from radiolab.families import complete_center_vertices, family_graph
from radiolab.layers import lower_bound

g = family_graph(FamilySpec("path-complete", 4, 3))
dm = all_pairs_distances(g)
for size in (1, 2, 4, 6):
    rep = best_lower_bound(g, dm, size)
    print(f"P_4 □ K_3, centers of size <= {size}: bound {rep.bound} with L0 = {rep.center}")

res = exact_radio_number(g, dm, SolverConfig())
print(f"exact search: rn = {res.rn} ({res.status}, {res.nodes} nodes); closed form {complete_radio_number(4, 3)}")
print()

for m, n in [(4, 3), (5, 3), (6, 3), (7, 4)]:
    h = family_graph(FamilySpec("path-complete", m, n))
    hd = all_pairs_distances(h)
    rep = lower_bound(h, hd, complete_center_vertices(m, n))
    print(f"P_{m} □ K_{n}: middle-fiber bound {rep.bound}, closed form {complete_radio_number(m, n)}")
