"""Radio numbers of small graphs from the exact solver.

Compares branch and bound with plain enumeration and with the best layer
bound, for a handful of familiar graphs.
"""
from __future__ import annotations

import time

from radiolab import all_pairs_distances, best_lower_bound, complete, cycle, path, star, wheel
from radiolab.exact import brute_force_radio_number, exact_radio_number

graphs = {"P_5": path(5), "C_6": cycle(6), "K_5": complete(5), "K_1,5": star(5), "W_6": wheel(6),
          "C_8": cycle(8), "P_10": path(10)}
print(f"{'graph':>6} {'rn':>4} {'bound':>6} {'brute':>6} {'nodes':>8} {'time':>7}")
for name, g in graphs.items():
    dm = all_pairs_distances(g)
    t0 = time.perf_counter()
    res = exact_radio_number(g, dm)
    dt = time.perf_counter() - t0
    brute = brute_force_radio_number(g, dm) if g.p <= 8 else "-"
    bound = best_lower_bound(g, dm, 2).bound
    print(f"{name:>6} {res.rn:>4} {bound:>6} {brute:>6} {res.nodes:>8} {dt:>6.2f}s")
