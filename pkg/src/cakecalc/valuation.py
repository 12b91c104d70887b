"""Valuations on the unit cake given by explicit Lebesgue-decomposition data.

A Valuation is generator data: point masses (the discontinuous part), a
piecewise-constant density (the absolutely continuous part), and rescaled
Cantor measures (the singular-continuous part).  The induced measure is
computed on demand on any canonical IntervalSet; the total mass is pinned
to exactly 1 at construction time.

All arithmetic is exact.  Only the singular-continuous components can force
approximation; those results come back as certified brackets (CdfValue).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import cantor
from .errors import (
    AtomObstruction,
    BadParameter,
    BadPartition,
    BadTolerance,
    NotNormalized,
    NotSliceable,
    OutOfCake,
    ZeroMass,
    ZeroPiece,
)
from .intervals import (
    EMPTY,
    FULL,
    Interval,
    IntervalSet,
    contains,
    intersect,
    normalize,
)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

DEFAULT_TOL = Fraction(1, 2**40)


@dataclass(frozen=True)
class CdfValue:
    """An exact rational (lo == hi) or a certified bracket [lo, hi]."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def exact(cls, x) -> "CdfValue":
        x = Fraction(x)
        return cls(x, x)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError(f"bracket {self} is not exact")
        return self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other):
        if isinstance(other, CdfValue):
            return CdfValue(self.lo + other.lo, self.hi + other.hi)
        return CdfValue(self.lo + other, self.hi + other)

    def __sub__(self, other):
        if isinstance(other, CdfValue):
            return CdfValue(self.lo - other.hi, self.hi - other.lo)
        return CdfValue(self.lo - other, self.hi - other)

    def clamp(self, lo=ZERO, hi=ONE) -> "CdfValue":
        return CdfValue(max(self.lo, lo), min(self.hi, hi))

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class CantorComponent:
    """A rescaled Cantor measure: mass `weight` spread over C_p inside `support`."""

    support: Interval
    p: Fraction
    weight: Fraction


@dataclass(frozen=True)
class Valuation:
    atoms: tuple[tuple[Fraction, Fraction], ...]  # (location, weight)
    density: tuple[tuple[Interval, Fraction], ...]  # (support, constant density)
    cantor: tuple[CantorComponent, ...]

    @property
    def has_atoms(self) -> bool:
        return bool(self.atoms)

    @property
    def has_sc(self) -> bool:
        return bool(self.cantor)


def atoms(v: Valuation) -> list[tuple[Fraction, Fraction]]:
    """The atomic part; empty iff the distribution function is continuous."""
    return list(v.atoms)


def decomposition_masses(v: Valuation) -> tuple[Fraction, Fraction, Fraction]:
    """(ac, sc, d) masses of the Lebesgue decomposition; they sum to 1."""
    ac = sum((d * sup.length for sup, d in v.density), ZERO)
    sc = sum((c.weight for c in v.cantor), ZERO)
    d = sum((w for _, w in v.atoms), ZERO)
    return ac, sc, d


def make_valuation(
    atoms: Iterable[tuple[Fraction, Fraction]] = (),
    density: Iterable[tuple[Interval, Fraction]] = (),
    cantor_parts: Iterable[CantorComponent] = (),
) -> Valuation:
    """Validate the generator data and pin the total mass to exactly 1."""
    atom_list = tuple((Fraction(a), Fraction(w)) for a, w in atoms)
    locs = [a for a, _ in atom_list]
    if len(set(locs)) != len(locs):
        raise BadParameter("duplicate atom locations")
    for a, w in atom_list:
        if not (ZERO <= a <= ONE):
            raise OutOfCake(f"atom at {a} is outside [0,1]")
        if w <= ZERO:
            raise BadParameter(f"atom weight {w} must be positive")

    dens_list = tuple((sup, Fraction(d)) for sup, d in density)
    for sup, d in dens_list:
        if d < ZERO:
            raise BadParameter(f"negative density {d}")
    _check_pairwise_disjoint([sup for sup, _ in dens_list], "density supports")

    sc_list = tuple(cantor_parts)
    for comp in sc_list:
        cantor.check_ratio(comp.p)
        if comp.weight <= ZERO:
            raise BadParameter(f"Cantor component weight {comp.weight} must be positive")
        if comp.support.is_singleton:
            raise BadParameter("Cantor component support must have positive length")
        if not (comp.support.lo_closed and comp.support.hi_closed):
            raise BadParameter("Cantor component support must be a closed interval")
    _check_pairwise_disjoint([c.support for c in sc_list], "Cantor supports")

    v = Valuation(atom_list, dens_list, sc_list)
    total = sum(decomposition_masses(v), ZERO)
    if total != ONE:
        raise NotNormalized(total)
    return v


def _check_pairwise_disjoint(supports: Sequence[Interval], what: str) -> None:
    for i, a in enumerate(supports):
        for b in supports[i + 1 :]:
            if not intersect(normalize([a]), normalize([b])).is_empty:
                raise BadPartition(f"{what} overlap: {a} and {b}")


def make_box_valuation(boxes: Iterable[tuple[Interval, int]]) -> Valuation:
    """Piecewise-constant valuation from (support, box count) pairs.

    The supports must partition [0,1]; piece i gets density
    count_i / (total * length_i), so the total mass is exactly 1.
    """
    box_list = [(sup, int(n)) for sup, n in boxes]
    for sup, n in box_list:
        if n < 0:
            raise BadParameter(f"negative box count {n}")
        if sup.is_singleton:
            raise BadPartition(f"singleton {sup} cannot carry boxes")
    supports = [sup for sup, _ in box_list]
    _check_pairwise_disjoint(supports, "box supports")
    if normalize(supports) != FULL:
        raise BadPartition("box supports do not cover [0,1]")
    total = sum(n for _, n in box_list)
    if total == 0:
        raise ZeroMass("all box counts are zero")
    dens = tuple(
        (sup, Fraction(n, total) / sup.length) for sup, n in box_list if n > 0
    )
    return make_valuation(density=dens)


def uniform_valuation() -> Valuation:
    return make_box_valuation([(FULL.components[0], 1)])


def dirac_valuation(a) -> Valuation:
    return make_valuation(atoms=[(Fraction(a), ONE)])


def cantor_valuation(p=Fraction(1, 3)) -> Valuation:
    return make_valuation(
        cantor_parts=[CantorComponent(FULL.components[0], Fraction(p), ONE)]
    )


# --- distribution function -------------------------------------------------


def _check_tol(tol) -> Fraction:
    tol = Fraction(tol)
    if tol <= ZERO:
        raise BadTolerance(f"tolerance {tol} must be positive")
    return tol


def cdf(v: Valuation, x, side: str = "at", tol=DEFAULT_TOL) -> CdfValue:
    """F(x) = v([0,x]) for side="at"; the left limit F(x-) for side="left_limit"."""
    x = Fraction(x)
    if not (ZERO <= x <= ONE):
        raise OutOfCake(f"point {x} is outside [0,1]")
    tol = _check_tol(tol)
    if side not in ("at", "left_limit"):
        raise BadParameter(f"unknown side {side!r}")
    left = side == "left_limit"

    mass = ZERO
    for loc, w in v.atoms:
        if loc < x or (loc == x and not left):
            mass += w
    for sup, d in v.density:
        overlap = min(x, sup.hi) - sup.lo
        if overlap > ZERO:
            mass += d * overlap

    result = CdfValue.exact(mass)
    if v.cantor:
        per_comp = tol / len(v.cantor)
        for comp in v.cantor:
            s, t = comp.support.lo, comp.support.hi
            if x <= s:
                continue
            if x >= t:
                result = result + comp.weight
            else:
                lo, hi = cantor.staircase(comp.p, (x - s) / (t - s), per_comp / comp.weight)
                result = result + CdfValue(comp.weight * lo, comp.weight * hi)
    return result.clamp()


def evaluate(v: Valuation, A: IntervalSet, tol=DEFAULT_TOL) -> CdfValue:
    """v(A), component-wise from one-sided CDF values; exact when sc-free."""
    tol = _check_tol(tol)
    if A.is_empty:
        return CdfValue.exact(ZERO)
    if not v.cantor:
        # fast exact path: the ac mass only depends on overlap lengths and
        # atoms only on kind-aware membership
        mass = ZERO
        for sup, d in v.density:
            if d == ZERO:
                continue
            for iv in A.components:
                if iv.lo >= sup.hi:
                    break
                overlap = min(iv.hi, sup.hi) - max(iv.lo, sup.lo)
                if overlap > ZERO:
                    mass += d * overlap
        for loc, w in v.atoms:
            if contains(A, loc):
                mass += w
        return CdfValue.exact(min(mass, ONE))
    per_call = tol / (2 * len(A.components))
    total = CdfValue.exact(ZERO)
    for iv in A.components:
        upper = cdf(v, iv.hi, "at" if iv.hi_closed else "left_limit", per_call)
        lower = cdf(v, iv.lo, "left_limit" if iv.lo_closed else "at", per_call)
        total = total + (upper - lower).clamp(ZERO, ONE)
    return total.clamp()


# --- exact CDF inversion (sc-free) -----------------------------------------


def _restricted_profile(v: Valuation, A: IntervalSet):
    """Atoms and constant-rate stretches of c ↦ v(A ∩ [0,c]) for sc-free v."""
    atom_in = [(loc, w) for loc, w in v.atoms if contains(A, loc)]
    segments = []
    for iv in A.components:
        if iv.is_singleton:
            continue
        for sup, d in v.density:
            if d == ZERO:
                continue
            s = max(iv.lo, sup.lo)
            e = min(iv.hi, sup.hi)
            if s < e:
                segments.append((s, e, d))
    segments.sort()
    return atom_in, segments


def _profile_at(atom_in, segments, x: Fraction) -> Fraction:
    mass = sum((w for loc, w in atom_in if loc <= x), ZERO)
    for s, e, rate in segments:
        if x <= s:
            break
        mass += rate * (min(x, e) - s)
    return mass


def _invert_profile(atom_in, segments, t: Fraction):
    """Minimal c with G(c) >= t, plus (G(c-), G(c)); None if t > G(1)."""
    bps = sorted(
        {ZERO, ONE}
        | {s for s, _, _ in segments}
        | {e for _, e, _ in segments}
        | {loc for loc, _ in atom_in}
    )
    prev = None
    g_prev = ZERO
    for b in bps:
        gb = _profile_at(atom_in, segments, b)
        if gb >= t:
            jump = sum((w for loc, w in atom_in if loc == b), ZERO)
            g_left = gb - jump
            if prev is None:  # b == 0
                return b, g_left, gb
            if g_left >= t:
                mid = (prev + b) / 2
                rate = sum((r for s, e, r in segments if s < mid < e), ZERO)
                c = prev + (t - g_prev) / rate
                return c, t, t
            return b, g_left, gb
        prev, g_prev = b, gb
    return None


# --- proportional cuts ------------------------------------------------------


def _prefix(A: IntervalSet, c: Fraction) -> IntervalSet:
    return intersect(A, normalize([Interval(ZERO, c, True, True)]))


def prefix_with_value(
    v: Valuation, A: IntervalSet, target: Fraction, tol=DEFAULT_TOL
) -> tuple[IntervalSet, Fraction]:
    """Smallest c such that v(A ∩ [0,c]) equals `target` (within tol when
    singular parts are present); returns (A ∩ [0,c], c).

    Requires v to have no atom inside A; the distribution is then continuous
    on A and the prefix value sweeps [0, v(A)] exactly.
    """
    tol = _check_tol(tol)
    target = Fraction(target)
    obstructing = [(loc, w) for loc, w in v.atoms if contains(A, loc)]
    if obstructing:
        raise AtomObstruction(obstructing)
    if target == ZERO:
        return EMPTY, ZERO

    if not v.has_sc:
        atom_in, segments = _restricted_profile(v, A)
        hit = _invert_profile(atom_in, segments, target)
        if hit is None:
            raise BadParameter(f"target {target} exceeds v(A)")
        c, _, _ = hit
        return _prefix(A, c), c

    # bisection with certified brackets on the prefix value
    lo_c, hi_c = ZERO, ONE
    for _ in range(400):
        mid_c = (lo_c + hi_c) / 2
        g = evaluate(v, _prefix(A, mid_c), tol / 4)
        if g.lo <= target <= g.hi or abs(g.midpoint - target) <= tol / 2:
            return _prefix(A, mid_c), mid_c
        if g.midpoint < target:
            lo_c = mid_c
        else:
            hi_c = mid_c
    return _prefix(A, hi_c), hi_c


def cut(v: Valuation, A: IntervalSet, alpha, tol=DEFAULT_TOL) -> IntervalSet:
    """Prefix piece A_α = A ∩ [0,c] with v(A_α) = α·v(A) (exact when sc-free)."""
    tol = _check_tol(tol)
    alpha = Fraction(alpha)
    if not (ZERO <= alpha <= ONE):
        raise BadParameter(f"alpha {alpha} outside [0,1]")
    obstructing = [(loc, w) for loc, w in v.atoms if contains(A, loc)]
    if obstructing:
        raise AtomObstruction(obstructing)
    vA = evaluate(v, A, tol / 4)
    if vA.hi == ZERO:
        raise ZeroPiece(f"v(A) = 0 for A = {A}")
    if alpha == ZERO:
        return EMPTY
    if alpha == ONE:
        return A
    target = alpha * (vA.value if vA.is_exact else vA.midpoint)
    piece, _ = prefix_with_value(v, A, target, tol)
    return piece


# --- slicing -----------------------------------------------------------------


def _span(lo: Fraction, lo_open: bool, hi: Fraction, hi_closed: bool) -> Interval:
    return Interval(lo, hi, not lo_open, hi_closed)


def slice_valuation(v: Valuation, epsilon, tol=DEFAULT_TOL) -> list[IntervalSet]:
    """Split [0,1] into finitely many disjoint pieces of value in (0, ε].

    Atoms of weight <= ε come out as singleton pieces; heavier atoms make the
    valuation non-sliceable.  With singular parts present the bound degrades
    to ε + tol.
    """
    tol = _check_tol(tol)
    epsilon = Fraction(epsilon)
    if epsilon <= ZERO:
        raise BadParameter(f"epsilon {epsilon} must be positive")
    heavy = [(loc, w) for loc, w in v.atoms if w > epsilon]
    if heavy:
        raise NotSliceable(heavy)

    if not v.has_sc:
        return _slice_exact(v, epsilon)
    if v.has_atoms:
        # mixed atom+singular slicing is not needed anywhere; keep the exact
        # paths honest instead of guessing
        raise NotSliceable(list(v.atoms))
    return _slice_bisect(v, epsilon, tol)


def _slice_exact(v: Valuation, epsilon: Fraction) -> list[IntervalSet]:
    atom_in, segments = _restricted_profile(v, FULL)
    pieces: list[Interval] = []
    s, s_open = ZERO, False
    consumed = ZERO
    while consumed < ONE:
        remaining = ONE - consumed
        if remaining <= epsilon:
            pieces.append(_span(s, s_open, ONE, True))
            break
        c, g_left, g_at = _invert_profile(atom_in, segments, consumed + epsilon)
        if g_at == consumed + epsilon:
            pieces.append(_span(s, s_open, c, True))
            s, s_open, consumed = c, True, g_at
        elif g_left > consumed:
            pieces.append(_span(s, s_open, c, False))
            s, s_open, consumed = c, False, g_left
        else:  # a lone atom at c (weight <= epsilon) plus a zero-mass run-up
            pieces.append(_span(s, s_open, c, True))
            s, s_open, consumed = c, True, g_at
    return [normalize([p]) for p in pieces]


def _slice_bisect(v: Valuation, epsilon: Fraction, tol: Fraction) -> list[IntervalSet]:
    pieces: list[Interval] = []
    s, s_open = ZERO, False
    consumed = ZERO  # midpoint estimate of F(s)
    max_steps = int(2 / epsilon) + 4
    for _ in range(max_steps):
        if ONE - consumed <= epsilon:
            pieces.append(_span(s, s_open, ONE, True))
            break
        t = consumed + epsilon
        lo_c, hi_c = s, ONE
        c = ONE
        for _ in range(400):
            mid_c = (lo_c + hi_c) / 2
            f = cdf(v, mid_c, "at", tol / 8)
            if abs(f.midpoint - t) <= tol / 2:
                c = mid_c
                consumed = f.midpoint
                break
            if f.midpoint < t:
                lo_c = mid_c
            else:
                hi_c = mid_c
        else:
            c = hi_c
            consumed = cdf(v, c, "at", tol / 8).midpoint
        pieces.append(_span(s, s_open, c, True))
        s, s_open = c, True
    return [normalize([p]) for p in pieces]
