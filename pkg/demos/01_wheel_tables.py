"""Optimal radio labelings of P_7 □ W_7 and P_8 □ W_7, printed as tables.

Each column is a vertex of the path, each row a vertex of the wheel (row 0 is
the hub). An entry ``t:f`` says the vertex is x_t in the ordering and gets
label f. The span equals the layer lower bound, which certifies optimality.
"""
from __future__ import annotations

from radiolab import FamilySpec, build_family


def show(m: int, n: int) -> None:
    res = build_family(FamilySpec("path-wheel", m, n))
    pos = {v: t for t, v in enumerate(res.ordering)}
    labels = res.labeling.labels
    print(f"P_{m} □ W_{n}: span {res.labeling.span}, bound {res.certificate.bound.bound}, "
          f"certified {res.certified}")
    print("      " + "".join(f"{'u_' + str(i):>10}" for i in range(1, m + 1)))
    for j in range(n + 1):
        cells = [f"{pos[v]}:{labels[v]}" for v in ((i - 1) * (n + 1) + j for i in range(1, m + 1))]
        print(f"v_{j:<3} " + "".join(f"{c:>10}" for c in cells))
    print()


if __name__ == "__main__":
    show(7, 7)
    show(8, 7)
