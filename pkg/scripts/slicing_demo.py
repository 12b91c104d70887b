#!/usr/bin/env python3
"""Slice a valuation into pieces of value at most epsilon and show the pieces.

Usage: python3 scripts/slicing_demo.py [config-name-or-path] [epsilon]
"""

import sys
from fractions import Fraction
from pathlib import Path

from cakecalc import (
    bundled_config_path,
    evaluate,
    load_valuation,
    render_interval_set,
    slice_valuation,
)


def main():
    name = sys.argv[1] if len(sys.argv) > 1 else "fig2"
    eps = Fraction(sys.argv[2]) if len(sys.argv) > 2 else Fraction(1, 17)
    path = name if Path(name).exists() else bundled_config_path(name)
    v = load_valuation(path)

    pieces = slice_valuation(v, eps)
    print(f"{len(pieces)} pieces of value <= {eps}:")
    for piece in pieces:
        print(f"  {render_interval_set(piece)}  value {evaluate(v, piece)}")


if __name__ == "__main__":
    main()
