"""Devil's-staircase distribution functions.

The unit staircase F_p is the CDF of the singular-continuous measure that
spreads mass uniformly (in the self-similar sense) over the Cantor set C_p:
with l = (1-p)/2,

    F_p(y) = 1/2 * F_p(y/l)            for y in [0, l],
    F_p(y) = 1/2                       for y in [l, l+p],
    F_p(y) = 1/2 + 1/2 * F_p((y-l-p)/l) for y in [l+p, 1].

Truncating the recursion at depth d yields a certified bracket of width
2^-d; landing on a plateau (or on 0/1) makes the value exact.  For the
classical case p = 1/3 the recursion maps rationals to rationals with a
bounded denominator, so the orbit is eventually periodic and the value can
be resolved exactly (this is the ternary-digit evaluation: digits 2 read as
binary 1s, truncation at the first digit 1).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameter

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def check_ratio(p: Fraction) -> Fraction:
    p = Fraction(p)
    if not (ZERO < p <= THIRD):
        raise BadParameter(f"Cantor ratio p={p} outside (0, 1/3]")
    return p


def staircase_exact_third(y: Fraction) -> Fraction:
    """Exact F_{1/3}(y) for rational y in [0,1] via orbit cycle detection."""
    y = Fraction(y)
    a, scale = ZERO, ONE
    seen: dict[Fraction, tuple[Fraction, Fraction]] = {}
    while True:
        if y <= ZERO:
            return a
        if y >= ONE:
            return a + scale
        if THIRD <= y <= 2 * THIRD:
            return a + scale * HALF
        if y in seen:
            a_prev, s_prev = seen[y]
            t = (a - a_prev) / (s_prev - scale)  # fixed point of the affine orbit
            return a_prev + s_prev * t
        seen[y] = (a, scale)
        if y < THIRD:
            y = 3 * y
        else:
            a += scale * HALF
            y = 3 * y - 2
        scale *= HALF


def staircase_bracket(p: Fraction, y: Fraction, depth: int) -> tuple[Fraction, Fraction]:
    """Bracket [lo,hi] ∋ F_p(y) with hi-lo <= 2^-depth (exact on plateaus)."""
    p = check_ratio(p)
    y = Fraction(y)
    left = (1 - p) / 2
    a, scale = ZERO, ONE
    for _ in range(depth):
        if y <= ZERO:
            return a, a
        if y >= ONE:
            return a + scale, a + scale
        if left <= y <= left + p:
            v = a + scale * HALF
            return v, v
        if y < left:
            y = y / left
        else:
            a += scale * HALF
            y = (y - left - p) / left
        scale *= HALF
    return a, a + scale


def staircase(p: Fraction, y: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """F_p(y) as an exact pair (lo == hi) whenever possible, else a bracket
    of width <= tol."""
    p = check_ratio(p)
    if p == THIRD:
        v = staircase_exact_third(y)
        return v, v
    depth = 1
    while Fraction(1, 2**depth) > tol:
        depth += 1
    return staircase_bracket(p, y, depth)
