"""Certify P_m □ W_n over a grid and compare against the closed form.

Also shows why the rim permutation needed repair: with the permutation as
originally written, n = 1 or 2 (mod 4) fails certification once m >= 4.
"""
from __future__ import annotations

import argparse

from radiolab import FamilySpec, build_family, pw_radio_number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=10)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    print(f"{'m':>3} {'n':>3} {'closed':>7} {'span':>7} {'repaired':>9} {'literal':>8}")
    for m in range(3, args.max_m + 1):
        for n in range(7, args.max_n + 1):
            res = build_family(FamilySpec("path-wheel", m, n), strict=False)
            lit = build_family(FamilySpec("path-wheel", m, n), strict=False, literal=True)
            print(f"{m:>3} {n:>3} {pw_radio_number(m, n):>7} {res.labeling.span:>7} "
                  f"{str(res.certified):>9} {str(lit.certified):>8}")


if __name__ == "__main__":
    main()
