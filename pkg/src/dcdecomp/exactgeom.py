"""Exact rational polyhedral computation.

Polyhedra carry either an inequality description (HPolyhedron) or a
vertex/ray description (VPolyhedron); conversion runs through the double
description method, linear programming through an exact simplex.  Everything
is immutable and all arithmetic is exact, so results are reproducible
bit-for-bit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from . import _dd, _simplex
from .errors import DimensionCapExceeded, DimensionMismatch, EmptyPolyhedron
from .rationals import (
    IntVec,
    Point,
    add,
    as_int_vec,
    ceil_vec,
    dot,
    floor_vec,
    is_integral,
    point,
    primitive,
    rat,
    scale_to_int,
)
from ._linalg import lattice_contains, nullspace_int

DEFAULT_DIM_CAP = 8

LE = "<="
EQ = "="


def resolve_dim_cap(dim_cap: int | None = None) -> int:
    if dim_cap is not None:
        return dim_cap
    env = os.environ.get("DCDECOMP_DIM_CAP")
    return int(env) if env else DEFAULT_DIM_CAP


@dataclass(frozen=True)
class Halfspace:
    """One row of an inequality system: normal . x (<=|=) offset."""

    normal: Point
    offset: Fraction
    rel: str = LE

    def __post_init__(self):
        object.__setattr__(self, "normal", point(self.normal))
        object.__setattr__(self, "offset", rat(self.offset))
        if self.rel not in (LE, EQ):
            raise ValueError(f"relation must be '<=' or '=', got {self.rel!r}")

    @property
    def is_trivial(self) -> bool:
        return not any(self.normal)

    def holds_at(self, x: Point) -> bool:
        v = dot(self.normal, x)
        return v == self.offset if self.rel == EQ else v <= self.offset


def halfspace(normal, offset, rel: str = LE) -> Halfspace:
    return Halfspace(point(normal), rat(offset), rel)


@dataclass(frozen=True)
class HPolyhedron:
    """{x in Q^dim : all rows hold}; emptiness is a queryable state."""

    dim: int
    rows: tuple[Halfspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        for i, hs in enumerate(self.rows):
            if len(hs.normal) != self.dim:
                raise DimensionMismatch(f"row {i} has dimension {len(hs.normal)}, expected {self.dim}")

    @cached_property
    def int_rows(self) -> tuple[tuple[IntVec, int, str], ...]:
        """Denominator-cleared rows (a, b, rel) for fast integer checks."""
        out = []
        for hs in self.rows:
            scaled = scale_to_int((*hs.normal, hs.offset))
            out.append((scaled[:-1], scaled[-1], hs.rel))
        return tuple(out)

    def contains_int_point(self, z: IntVec) -> bool:
        for a, b, rel in self.int_rows:
            v = sum(ai * zi for ai, zi in zip(a, z))
            if (v != b) if rel == EQ else (v > b):
                return False
        return True


def hpolyhedron(dim: int, rows) -> HPolyhedron:
    return HPolyhedron(dim, tuple(rows))


@dataclass(frozen=True)
class VPolyhedron:
    """conv(vertices) + cone(rays); lineality shows up as opposite ray pairs."""

    dim: int
    vertices: tuple[Point, ...]
    rays: tuple[Point, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(point(v) for v in self.vertices))
        rs = []
        seen = set()
        for r in self.rays:
            r = point(r)
            if not any(r):
                raise ValueError("rays must be nonzero")
            key = tuple(Fraction(v) for v in primitive(scale_to_int(r)))
            if key not in seen:
                seen.add(key)
                rs.append(key)
        object.__setattr__(self, "rays", tuple(rs))
        for v in self.vertices:
            if len(v) != self.dim:
                raise DimensionMismatch("vertex dimension mismatch")
        for r in self.rays:
            if len(r) != self.dim:
                raise DimensionMismatch("ray dimension mismatch")

    @property
    def is_empty(self) -> bool:
        return not self.vertices


def vpolyhedron(dim: int, vertices, rays=()) -> VPolyhedron:
    return VPolyhedron(dim, tuple(vertices), tuple(rays))


@dataclass(frozen=True)
class IntegralBox:
    """{x : lower <= x <= upper} with integer corners."""

    lower: IntVec
    upper: IntVec

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(int(v) for v in self.lower))
        object.__setattr__(self, "upper", tuple(int(v) for v in self.upper))
        if len(self.lower) != len(self.upper):
            raise DimensionMismatch("box corner dimensions differ")
        if any(l > u for l, u in zip(self.lower, self.upper)):
            raise ValueError("box needs lower <= upper componentwise")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def rows(self) -> list[Halfspace]:
        n = self.dim
        out = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            out.append(halfspace(e, self.upper[i]))
            e[i] = -1
            out.append(halfspace(e, -self.lower[i]))
        return out

    def as_hrep(self) -> HPolyhedron:
        return HPolyhedron(self.dim, tuple(self.rows()))

    def contains_int(self, z: IntVec) -> bool:
        return all(l <= v <= u for l, v, u in zip(self.lower, z, self.upper))

    def int_points(self):
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))

    def inflate(self, k: int) -> "IntegralBox":
        return IntegralBox(tuple(v - k for v in self.lower), tuple(v + k for v in self.upper))

    def cells(self):
        """Corners z of the unit cells [z, z+1] contained in the box, in
        lexicographic order."""
        ranges = []
        for l, u in zip(self.lower, self.upper):
            if u - l < 1:
                return
            ranges.append(range(l, u))
        yield from product(*ranges)


def integral_box(lower, upper) -> IntegralBox:
    return IntegralBox(tuple(lower), tuple(upper))


# ---------------------------------------------------------------------------
# operations


def _check_dims(*dims: int) -> None:
    if len(set(dims)) > 1:
        raise DimensionMismatch(f"mixed dimensions {dims}")


def lp_solve(p: HPolyhedron, c: Point, sense: str = "max"):
    """Exact LP over an H-polyhedron.

    Returns ("optimal", value, point), ("unbounded", ray) or ("infeasible",).
    """
    c = point(c)
    _check_dims(p.dim, len(c))
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    return _simplex.lp_over_rows(p.dim, p.rows, c, sense)


def is_empty(p: HPolyhedron) -> bool:
    return _simplex.feasible_point(p.dim, p.rows) is None


def to_vrep(p: HPolyhedron, dim_cap: int | None = None) -> VPolyhedron:
    """Vertex/ray description of a nonempty H-polyhedron (double description)."""
    if p.dim > resolve_dim_cap(dim_cap):
        raise DimensionCapExceeded(f"dimension {p.dim} exceeds cap {resolve_dim_cap(dim_cap)}")
    vertices, rays, lineality = _dd.vrep_from_hrep(p.dim, p.rows)
    if not vertices:
        raise EmptyPolyhedron("polyhedron has no points")
    allrays = list(rays)
    for l in lineality:
        allrays.append(l)
        allrays.append(tuple(-v for v in l))
    return VPolyhedron(p.dim, tuple(vertices), tuple(sorted(set(allrays))))


def to_hrep(v: VPolyhedron, dim_cap: int | None = None) -> HPolyhedron:
    """Inequality description of conv(vertices) + cone(rays)."""
    if v.dim > resolve_dim_cap(dim_cap):
        raise DimensionCapExceeded(f"dimension {v.dim} exceeds cap {resolve_dim_cap(dim_cap)}")
    if v.is_empty:
        raise EmptyPolyhedron("V-representation has no vertices")
    rows = [
        Halfspace(normal, offset, rel)
        for normal, offset, rel in _dd.hrep_from_generators(v.dim, v.vertices, v.rays)
    ]
    return HPolyhedron(v.dim, tuple(rows))


def intersect(p1: HPolyhedron, p2: HPolyhedron) -> HPolyhedron:
    """Row concatenation; no simplification."""
    _check_dims(p1.dim, p2.dim)
    return HPolyhedron(p1.dim, p1.rows + p2.rows)


def intersect_box(p: HPolyhedron, box: IntegralBox) -> HPolyhedron:
    _check_dims(p.dim, box.dim)
    return HPolyhedron(p.dim, p.rows + tuple(box.rows()))


def contains_point(p: HPolyhedron, x: Point) -> bool:
    x = point(x)
    _check_dims(p.dim, len(x))
    return all(hs.holds_at(x) for hs in p.rows)


def _vrep_inside(v: VPolyhedron, p: HPolyhedron) -> bool:
    """conv(v.vertices)+cone(v.rays) subset of p, checked exactly."""
    for vert in v.vertices:
        if not contains_point(p, vert):
            return False
    zero = Fraction(0)
    for ray in v.rays:
        for hs in p.rows:
            val = dot(hs.normal, ray)
            if (val != zero) if hs.rel == EQ else (val > zero):
                return False
    return True


def polyhedra_equal(p1: HPolyhedron, p2: HPolyhedron, dim_cap: int | None = None) -> bool:
    """Mutual inclusion, via V-representation containment."""
    _check_dims(p1.dim, p2.dim)
    if _canonical_rows(p1) == _canonical_rows(p2):
        return True
    e1, e2 = is_empty(p1), is_empty(p2)
    if e1 or e2:
        return e1 == e2
    return _vrep_inside(to_vrep(p1, dim_cap), p2) and _vrep_inside(to_vrep(p2, dim_cap), p1)


def _canonical_rows(p: HPolyhedron):
    out = set()
    for a, b, rel in p.int_rows:
        out.add((primitive(a + (b,)), rel))
    return out


def minkowski_sum_polyhedra(v1: VPolyhedron, v2: VPolyhedron) -> VPolyhedron:
    """Exact Minkowski sum in V-representation (pairwise vertex sums)."""
    _check_dims(v1.dim, v2.dim)
    if v1.is_empty or v2.is_empty:
        raise EmptyPolyhedron("Minkowski sum of an empty polyhedron")
    verts = sorted({add(a, b) for a in v1.vertices for b in v2.vertices})
    rays = sorted({*v1.rays, *v2.rays})
    return VPolyhedron(v1.dim, tuple(verts), tuple(rays))


def is_integer_polyhedron(p: HPolyhedron, dim_cap: int | None = None) -> bool:
    """Every minimal face contains an integer vector.

    Pointed case: all vertices integral.  With lineality, each minimal face is
    vertex + span(lineality); whether that affine set meets Z^n is a lattice
    membership question: with C a row basis of the orthogonal complement of
    the lineality space, the face meets Z^n iff C.vertex lies in C.Z^n.
    """
    vertices, lineality = _vrep_with_lineality(p, dim_cap)
    if not vertices:
        raise EmptyPolyhedron("polyhedron has no points")
    if not lineality:
        return all(is_integral(v) for v in vertices)
    comp = nullspace_int(lineality, p.dim)
    if not comp:
        return True  # lineality spans everything; every translate meets Z^n
    cmat = [list(c) for c in comp]
    for v in vertices:
        target = [dot(tuple(Fraction(ci) for ci in c), v) for c in comp]
        if any(t.denominator != 1 for t in target):
            return False
        if not lattice_contains(cmat, [int(t) for t in target]):
            return False
    return True


def _vrep_with_lineality(p: HPolyhedron, dim_cap: int | None = None):
    if p.dim > resolve_dim_cap(dim_cap):
        raise DimensionCapExceeded(f"dimension {p.dim} exceeds cap {resolve_dim_cap(dim_cap)}")
    vertices, rays, lineality = _dd.vrep_from_hrep(p.dim, p.rows)
    return vertices, lineality


def bounding_box(v: VPolyhedron) -> IntegralBox:
    """Componentwise floor/ceil over the vertices; rays are ignored."""
    if v.is_empty:
        raise EmptyPolyhedron("bounding box of an empty polyhedron")
    lower = [min(vert[i] for vert in v.vertices) for i in range(v.dim)]
    upper = [max(vert[i] for vert in v.vertices) for i in range(v.dim)]
    return IntegralBox(floor_vec(tuple(lower)), ceil_vec(tuple(upper)))


def full_space(dim: int) -> HPolyhedron:
    return HPolyhedron(dim, ())


def cone_from_generators(dim: int, generators, dim_cap: int | None = None) -> HPolyhedron:
    """H-representation of cone(generators) (the origin if none)."""
    origin = point([0] * dim)
    return to_hrep(VPolyhedron(dim, (origin,), tuple(point(g) for g in generators)), dim_cap)


def in_convex_hull(x: Point, points) -> bool:
    return _simplex.in_convex_hull(point(x), [point(p) for p in points])
