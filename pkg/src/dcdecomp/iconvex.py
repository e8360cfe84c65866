"""Integral convexity, box-integrality, characteristic cones, decompositions.

The two decompositions produced here are
  * polyhedron = bounded_part + cone_part, both box-integer when the input is;
  * lattice set = base + (cone ∩ Z^n), via a bounding box inflated by the
    number of unit cone generators.
Both are re-verified internally and fail loudly rather than return wrong
parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import _dd, _simplex
from .errors import (
    EmptyPolyhedron,
    EmptySet,
    NotUnitGenerated,
    RecompositionFailure,
)
from .exactgeom import (
    EQ,
    LE,
    Halfspace,
    HPolyhedron,
    IntegralBox,
    VPolyhedron,
    bounding_box,
    cone_from_generators,
    intersect_box,
    is_empty,
    minkowski_sum_polyhedra,
    polyhedra_equal,
    resolve_dim_cap,
    to_hrep,
    to_vrep,
)
from .lattice import (
    GeneratedSet,
    LatticeSet,
    Window,
    integer_points,
    integral_neighborhood,
    truncate,
)
from .rationals import IntVec, Point, is_integral, point

__all__ = [
    "Witness",
    "Verdict",
    "is_integrally_convex",
    "is_box_integer_within",
    "char_cone",
    "cone_unit_generators",
    "decompose_polyhedron",
    "decompose_set",
    "is_conic",
    "verify_decomposition",
]


@dataclass(frozen=True)
class Witness:
    """Machine-readable counterexample: offending point, plus its unit cell
    when the failure is cell-local."""

    point: Point
    cell: IntVec | None = None

    def to_json(self) -> dict:
        from .rationals import format_rat

        out = {"point": [format_rat(Fraction(c)) for c in self.point]}
        if self.cell is not None:
            out["cell"] = list(self.cell)
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.ok


def _cell_box(z: IntVec) -> IntegralBox:
    return IntegralBox(z, tuple(v + 1 for v in z))


def _cell_outside_rows(p: HPolyhedron, z: IntVec) -> bool:
    """True when some single row already excludes the whole cell [z, z+1]."""
    for a, b, rel in p.int_rows:
        lo = 0
        hi = 0
        for ai, zi in zip(a, z):
            if ai > 0:
                lo += ai * zi
                hi += ai * (zi + 1)
            elif ai < 0:
                lo += ai * (zi + 1)
                hi += ai * zi
        if rel == EQ:
            if lo > b or hi < b:
                return True
        elif lo > b:
            return True
    return False


def _cell_inside(p: HPolyhedron, z: IntVec) -> bool:
    """True when all 2^n corners of the cell lie in p (so the cell does)."""
    for corner in product(*((zi, zi + 1) for zi in z)):
        if not p.contains_int_point(corner):
            return False
    return True


def _vrep_or_none(p: HPolyhedron, dim_cap) -> VPolyhedron | None:
    try:
        return to_vrep(p, dim_cap)
    except EmptyPolyhedron:
        return None


def is_integrally_convex(s: LatticeSet, dim_cap: int | None = None) -> Verdict:
    """Unit-cell test: conv(S) ∩ cell must equal conv(S ∩ cell) for every
    cell meeting conv(S).

    On failure the witness point x satisfies x ∈ conv(S) and
    x ∉ conv(S ∩ N(x)): it is a vertex of conv(S) ∩ cell outside
    conv(S ∩ cell), for the lexicographically smallest offending cell.
    """
    if not s.points:
        raise EmptySet("integral convexity needs a nonempty set")
    hull = to_hrep(s.hull_vrep(), dim_cap)
    pts = s.sorted_points()
    lower = tuple(min(p[i] for p in pts) for i in range(s.dim))
    upper = tuple(max(max(p[i] for p in pts), lower[i] + 1) for i in range(s.dim))
    for z in IntegralBox(lower, upper).cells():
        local = [p for p in pts if all(zi <= c <= zi + 1 for zi, c in zip(z, p))]
        if len(local) == 2 ** s.dim:
            continue  # the full cell is present: both sides equal the cell
        if not local and _cell_outside_rows(hull, z):
            continue
        piece = _vrep_or_none(intersect_box(hull, _cell_box(z)), dim_cap)
        if piece is None:
            continue
        local_pts = [point(p) for p in local]
        bad = [v for v in piece.vertices if not _simplex.in_convex_hull(v, local_pts)]
        if bad:
            return Verdict(False, Witness(min(bad), z))
    return Verdict(True)


def is_box_integer_within(p: HPolyhedron, window: Window, dim_cap: int | None = None) -> Verdict:
    """Cell-by-cell integrality of p within the window: sound and complete
    for cells contained in it.  The witness is the lexicographically smallest
    offending cell with its smallest fractional vertex."""
    for z in window.cells():
        if _cell_outside_rows(p, z):
            continue
        if _cell_inside(p, z):
            continue  # the piece is the full cell, which is integral
        piece = _vrep_or_none(intersect_box(p, _cell_box(z)), dim_cap)
        if piece is None:
            continue
        frac = [v for v in piece.vertices if not is_integral(v)]
        if frac:
            return Verdict(False, Witness(min(frac), z))
    return Verdict(True)


def char_cone(p: HPolyhedron) -> HPolyhedron:
    """Characteristic (recession) cone: same normals, zero offsets."""
    if is_empty(p):
        raise EmptyPolyhedron("characteristic cone of an empty polyhedron")
    zero = Fraction(0)
    rows = tuple(Halfspace(hs.normal, zero, hs.rel) for hs in p.rows if not hs.is_trivial)
    return HPolyhedron(p.dim, rows)


def _is_cone_hrep(p: HPolyhedron) -> bool:
    return all(hs.offset == 0 for hs in p.rows)


def _in_cone_rows(p: HPolyhedron, v: IntVec) -> bool:
    for a, b, rel in p.int_rows:
        val = sum(ai * vi for ai, vi in zip(a, v))
        if (val != 0) if rel == EQ else (val > 0):
            return False
    return True


def cone_unit_generators(c: HPolyhedron, dim_cap: int | None = None) -> list[IntVec]:
    """Minimal generating subset of the {-1,0,+1} vectors contained in the
    cone.  Raises NotUnitGenerated when those vectors do not span the cone,
    which certifies that c is not the characteristic cone of any box-integer
    polyhedron."""
    if not _is_cone_hrep(c):
        raise ValueError("cone H-representation must have zero offsets")
    if c.dim > resolve_dim_cap(dim_cap):
        from .errors import DimensionCapExceeded

        raise DimensionCapExceeded(f"dimension {c.dim} exceeds cap")
    members = [
        v for v in product((-1, 0, 1), repeat=c.dim) if any(v) and _in_cone_rows(c, v)
    ]
    kept = list(members)
    for v in list(kept):  # lexicographic greedy minimality
        rest = [g for g in kept if g != v]
        if _simplex.in_cone_hull(v, rest):
            kept = rest
    if not polyhedra_equal(cone_from_generators(c.dim, kept, dim_cap), c, dim_cap):
        raise NotUnitGenerated(
            "{-1,0,+1} members do not generate the cone; "
            "input is not the characteristic cone of a box-integer polyhedron"
        )
    return kept


def decompose_polyhedron(
    p: HPolyhedron, dim_cap: int | None = None
) -> tuple[HPolyhedron, HPolyhedron]:
    """Split p into a bounded part (p clipped to its vertex bounding box) and
    its characteristic cone; verifies that the Minkowski sum re-creates p."""
    vrep = to_vrep(p, dim_cap)
    cone = char_cone(p)
    box = bounding_box(vrep)
    bounded = intersect_box(p, box)
    recomposed = minkowski_sum_polyhedra(to_vrep(bounded, dim_cap), to_vrep(cone, dim_cap))
    if not polyhedra_equal(to_hrep(recomposed, dim_cap), p, dim_cap):
        raise RecompositionFailure("bounded part + cone does not equal the input")
    return bounded, cone


def decompose_set(
    p: HPolyhedron,
    verify_window: Window | None = None,
    dim_cap: int | None = None,
) -> GeneratedSet:
    """Decompose S = p ∩ Z^n as base + (cone ∩ Z^n) for box-integer p.

    The base is S clipped to the vertex bounding box inflated by the number
    of unit cone generators; the result is checked against a verification
    window (default: bounding box inflated by that count plus two)."""
    vrep = to_vrep(p, dim_cap)
    cone = char_cone(p)
    gens = cone_unit_generators(cone, dim_cap)
    box = bounding_box(vrep).inflate(len(gens))
    base = integer_points(intersect_box(p, box), dim_cap=dim_cap)
    result = GeneratedSet(base, tuple(gens))
    window = verify_window or bounding_box(vrep).inflate(len(gens) + 2)
    if truncate(result, window, dim_cap).points != integer_points(p, window, dim_cap).points:
        raise RecompositionFailure(
            "base + cone integer points disagree with the input on the verification window"
        )
    return result


def is_conic(obj: GeneratedSet | LatticeSet, dim_cap: int | None = None) -> bool:
    """A set is conic when its convex hull is a cone."""
    if isinstance(obj, LatticeSet):
        if not obj.points:
            raise EmptySet("conic test needs a nonempty set")
        return obj.points == {(0,) * obj.dim}
    base = obj.base.sorted_points()
    if not base:
        raise EmptySet("conic test needs a nonempty base")
    cone = cone_from_generators(obj.dim, obj.generators, dim_cap)
    if base == [(0,) * obj.dim]:
        return True
    hull = to_hrep(
        VPolyhedron(obj.dim, tuple(point(b) for b in base), tuple(point(g) for g in obj.generators)),
        dim_cap,
    )
    return polyhedra_equal(hull, cone, dim_cap)


def verify_decomposition(
    p: HPolyhedron, tg: GeneratedSet, window: Window, dim_cap: int | None = None
) -> bool:
    """Acceptance harness: windowed equality plus part-level certificates."""
    if truncate(tg, window, dim_cap).points != integer_points(p, window, dim_cap).points:
        return False
    if not is_integrally_convex(tg.base, dim_cap):
        return False
    cone = cone_from_generators(tg.dim, tg.generators, dim_cap)
    conic_part = GeneratedSet(LatticeSet(tg.dim, frozenset({(0,) * tg.dim})), tg.generators)
    if not is_conic(conic_part, dim_cap):
        return False
    return bool(is_box_integer_within(cone, window, dim_cap))
