#!/usr/bin/env python3
"""Print the Cantor-iterate table for a given removal ratio p, together with
exact staircase values at a few sample points.

Usage: python3 scripts/cantor_table.py [p] [n_max]
"""

import sys
from fractions import Fraction

from cakecalc import cantor_iterate, removed_mass, total_length
from cakecalc.cantor import staircase


def main():
    p = Fraction(sys.argv[1]) if len(sys.argv) > 1 else Fraction(1, 3)
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 8

    print(f"Cantor iterates for p = {p}")
    print(f"{'n':>3} {'components':>11} {'remaining':>14} {'removed':>14}")
    for n in range(n_max + 1):
        it = cantor_iterate(p, n)
        print(
            f"{n:>3} {len(it.set):>11} {str(total_length(it.set)):>14} "
            f"{str(removed_mass(p, n)):>14}"
        )

    print()
    print(f"staircase F_p at sample points (tol 2^-40):")
    for y in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)):
        lo, hi = staircase(p, y, Fraction(1, 2**40))
        shown = str(lo) if lo == hi else f"[{lo}, {hi}]"
        print(f"  F({y}) = {shown}")


if __name__ == "__main__":
    main()
