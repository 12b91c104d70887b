"""Finite-scale witnesses: Cantor iterates, the countable-union witness,
and relative frequencies along a point sequence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .cantor import check_ratio
from .errors import BadIndex, BadParameter
from .intervals import FULL, Interval, IntervalSet, normalize

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class CantorIterate:
    p: Fraction
    n: int
    set: IntervalSet


def cantor_iterate(p, n: int) -> CantorIterate:
    """A_n: from each of the 2^(i-1) components of A_(i-1) remove the open
    middle interval of length p^i.  A_0 = [0,1]."""
    p = check_ratio(p)
    if n < 0:
        raise BadParameter(f"iteration count {n} must be >= 0")
    # integer endpoints over the common denominator (2b)^n keep the
    # construction cheap even for ~2^20 components
    a, b = p.numerator, p.denominator
    comps = [(0, 1)]
    den = 1
    for i in range(1, n + 1):
        den *= 2 * b
        half_gap = a**i * 2 ** (i - 1)  # (p^i / 2) in units of 1/den
        nxt = []
        for lo, hi in comps:
            lo, hi = lo * 2 * b, hi * 2 * b
            mid = (lo + hi) // 2
            nxt.append((lo, mid - half_gap))
            nxt.append((mid + half_gap, hi))
        comps = nxt
    ivset = IntervalSet(
        tuple(Interval(Fraction(lo, den), Fraction(hi, den), True, True) for lo, hi in comps)
    )
    return CantorIterate(p, n, ivset)


def removed_mass(p, n: int) -> Fraction:
    """Total length of the middle intervals removed up to stage n:
    sum over i of 2^(i-1) * p^i."""
    p = check_ratio(p)
    if n < 0:
        raise BadParameter(f"iteration count {n} must be >= 0")
    total = ZERO
    for i in range(1, n + 1):
        total += 2 ** (i - 1) * p**i
    return total


def disjoint_union_witness(n: int) -> IntervalSet:
    """Union of [3/2^(i+2), 1/2^i] for i = 0..n-1; the components never merge,
    so the n-th stage has exactly n components."""
    if n < 1:
        raise BadParameter(f"witness size {n} must be >= 1")
    ivs = [
        Interval(Fraction(3, 2 ** (i + 2)), Fraction(1, 2**i), True, True)
        for i in range(n)
    ]
    return normalize(ivs)


def relative_frequency(
    member: Callable[[Fraction], bool], sequence: Sequence[Fraction], n: int
) -> Fraction:
    """Fraction of the first n sequence points satisfying the predicate."""
    if not (1 <= n <= len(sequence)):
        raise BadIndex(f"n={n} outside 1..{len(sequence)}")
    hits = sum(1 for x in sequence[:n] if member(x))
    return Fraction(hits, n)
