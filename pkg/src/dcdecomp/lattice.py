"""Integer-point machinery: neighborhoods, enumeration, discrete sums, holes.

Infinite sets never materialize: generated sets pair a finite base with cone
generators, and observations go through explicit windows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import _simplex
from .errors import DimensionMismatch, EmptyPolyhedron, EmptySet, UnboundedWithoutWindow
from .exactgeom import (
    EQ,
    HPolyhedron,
    IntegralBox,
    VPolyhedron,
    cone_from_generators,
    intersect_box,
    to_hrep,
    to_vrep,
    resolve_dim_cap,
)
from .rationals import IntVec, Point, ceil_vec, floor_vec, point, primitive

Window = IntegralBox


@dataclass(frozen=True)
class LatticeSet:
    """A finite set of integer points of common dimension."""

    dim: int
    points: frozenset[IntVec]

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(int(c) for c in p) for p in self.points))
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionMismatch(f"point {p} does not have dimension {self.dim}")

    def sorted_points(self) -> list[IntVec]:
        return sorted(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def hull_vrep(self) -> VPolyhedron:
        if not self.points:
            raise EmptySet("empty lattice set has no hull")
        return VPolyhedron(self.dim, tuple(point(p) for p in self.sorted_points()))


def lattice_set(dim: int, points) -> LatticeSet:
    return LatticeSet(dim, frozenset(tuple(p) for p in points))


@dataclass(frozen=True)
class GeneratedSet:
    """base + (cone(generators) intersected with Z^n); see truncate()."""

    base: LatticeSet
    generators: tuple[IntVec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        gens = []
        seen = set()
        for g in self.generators:
            g = tuple(int(v) for v in g)
            if not any(g):
                raise ValueError("generators must be nonzero")
            if len(g) != self.base.dim:
                raise DimensionMismatch("generator dimension mismatch")
            if g not in seen:
                seen.add(g)
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def dim(self) -> int:
        return self.base.dim


def integral_neighborhood(x: Point) -> LatticeSet:
    """Integer points z with |x_i - z_i| < 1 for every coordinate."""
    x = point(x)
    lo, hi = floor_vec(x), ceil_vec(x)
    pts = product(*(range(l, u + 1) for l, u in zip(lo, hi)))
    return LatticeSet(len(x), frozenset(pts))


def _one_var_interval(rows) -> tuple[Fraction | None, Fraction | None]:
    """Exact (lo, hi) for a univariate system a*y <= b; None marks unbounded
    on that side, and lo > hi marks emptiness (so does any 0*y <= b with b<0,
    encoded as (1, 0))."""
    lo: Fraction | None = None
    hi: Fraction | None = None
    for a, b in rows:
        if a == 0:
            if b < 0:
                return Fraction(1), Fraction(0)
            continue
        bound = Fraction(b, a)
        if a > 0:
            hi = bound if hi is None or bound < hi else hi
        else:
            lo = bound if lo is None or bound > lo else lo
    return lo, hi


@dataclass(frozen=True)
class _Row:
    normal: tuple
    offset: Fraction
    rel: str


def integer_points(
    p: HPolyhedron, window: Window | None = None, dim_cap: int | None = None
) -> LatticeSet:
    """Exact enumeration of p (or p within window) by coordinate recursion
    with per-prefix LP bounds.  Unbounded p without a window is an error."""
    region = intersect_box(p, window) if window is not None else p
    try:
        vrep = to_vrep(region, dim_cap)
    except EmptyPolyhedron:  # empty region enumerates to the empty set
        return LatticeSet(p.dim, frozenset())
    if vrep.rays:
        raise UnboundedWithoutWindow("unbounded region; supply a window")

    # integer rows (a, b) meaning a . x <= b; equalities as opposite pairs
    base_rows: list[tuple[IntVec, int]] = []
    for a, b, rel in region.int_rows:
        base_rows.append((a, b))
        if rel == EQ:
            base_rows.append((tuple(-v for v in a), -b))

    n = p.dim
    found: list[IntVec] = []

    def recurse(prefix: tuple[int, ...], rows: list[tuple[IntVec, int]]) -> None:
        k = len(prefix)
        if k == n:
            found.append(prefix)
            return
        rest = n - k
        if rest == 1:
            lo, hi = _one_var_interval([(a[0], b) for a, b in rows])
            if lo is None or hi is None:
                raise UnboundedWithoutWindow("residual direction unbounded")
            for v in range(math.ceil(lo), math.floor(hi) + 1):
                found.append(prefix + (v,))
            return
        sub = [_Row(tuple(Fraction(v) for v in a), Fraction(b), "<=") for a, b in rows]
        c = tuple(Fraction(int(i == 0)) for i in range(rest))
        lo_res = _simplex.lp_over_rows(rest, sub, c, "min")
        if lo_res[0] == "infeasible":
            return
        hi_res = _simplex.lp_over_rows(rest, sub, c, "max")
        assert lo_res[0] == "optimal" and hi_res[0] == "optimal"
        for v in range(math.ceil(lo_res[1]), math.floor(hi_res[1]) + 1):
            nxt = []
            feasible = True
            for a, b in rows:
                nb = b - a[0] * v
                na = a[1:]
                if not any(na):
                    if nb < 0:
                        feasible = False
                        break
                    continue
                nxt.append((na, nb))
            if feasible:
                recurse(prefix + (v,), nxt)

    recurse((), base_rows)
    return LatticeSet(n, frozenset(found))


def is_hole_free(s: LatticeSet, dim_cap: int | None = None) -> bool:
    """S equals the integer points of its own convex hull."""
    if not s.points:
        raise EmptySet("hole-freeness needs a nonempty set")
    hull = to_hrep(s.hull_vrep(), dim_cap)
    return integer_points(hull, dim_cap=dim_cap).points == s.points


def minkowski_sum_sets(s1: LatticeSet, s2: LatticeSet) -> LatticeSet:
    if s1.dim != s2.dim:
        raise DimensionMismatch("Minkowski sum needs equal dimensions")
    pts = frozenset(tuple(a + b for a, b in zip(p, q)) for p in s1.points for q in s2.points)
    return LatticeSet(s1.dim, pts)


def find_minkowski_holes(s1: LatticeSet, s2: LatticeSet, dim_cap: int | None = None) -> LatticeSet:
    """Integer points of conv(S1+S2) that the discrete sum misses."""
    disc = minkowski_sum_sets(s1, s2)
    if not disc.points:
        raise EmptySet("hole test needs nonempty summands")
    hull_pts = integer_points(to_hrep(disc.hull_vrep(), dim_cap), dim_cap=dim_cap)
    return LatticeSet(disc.dim, hull_pts.points - disc.points)


def truncate(g: GeneratedSet, window: Window, dim_cap: int | None = None) -> LatticeSet:
    """{t + c : t in base, c in cone(generators) ∩ Z^n} clipped to the window.

    The cone is enumerated inside a box inflated so that every contribution to
    the window is covered: the union over base points t of (window - t).
    """
    if window.dim != g.dim:
        raise DimensionMismatch("window dimension mismatch")
    base = g.base.sorted_points()
    if not base:
        return LatticeSet(g.dim, frozenset())
    inside = frozenset(t for t in base if window.contains_int(t))
    if not g.generators:
        return LatticeSet(g.dim, inside)
    lo = tuple(min(window.lower[i] - t[i] for t in base) for i in range(g.dim))
    hi = tuple(max(window.upper[i] - t[i] for t in base) for i in range(g.dim))
    cone = cone_from_generators(g.dim, g.generators, dim_cap)
    cone_pts = integer_points(cone, Window(lo, hi), dim_cap)
    out = set()
    for t in base:
        for c in cone_pts.points:
            s = tuple(a + b for a, b in zip(t, c))
            if window.contains_int(s):
                out.add(s)
    return LatticeSet(g.dim, frozenset(out))
