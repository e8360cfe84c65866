"""Built-in worked examples with known expected outcomes.

Each fixture replays one documented example end to end and reports expected
vs. computed.  The registry backs `dcdecomp paper-examples` and the test
suite; ids are stable and sorted output keeps CLI runs byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from . import _simplex
from .dca_classes import (
    ClassTag,
    LNatSystem,
    ParamodularPair,
    box_intersect_class,
    char_cone_class,
    decompose_class_polyhedron,
    decompose_class_set,
    is_lnat2_set,
    is_mnat_set,
    lnat_to_hrep,
)
from .exactgeom import (
    HPolyhedron,
    IntegralBox,
    bounding_box,
    cone_from_generators,
    contains_point,
    halfspace,
    hpolyhedron,
    in_convex_hull,
    intersect_box,
    is_integer_polyhedron,
    lp_solve,
    minkowski_sum_polyhedra,
    polyhedra_equal,
    to_hrep,
    to_vrep,
    vpolyhedron,
)
from .iconvex import (
    char_cone,
    cone_unit_generators,
    decompose_polyhedron,
    decompose_set,
    is_box_integer_within,
    is_conic,
    is_integrally_convex,
    verify_decomposition,
)
from .lattice import (
    GeneratedSet,
    LatticeSet,
    Window,
    find_minkowski_holes,
    integer_points,
    integral_neighborhood,
    is_hole_free,
    lattice_set,
    minkowski_sum_sets,
    truncate,
)
from .proofkit import separate_cube_subset, verify_cube_separation
from .rationals import point


@dataclass(frozen=True)
class Fixture:
    id: str
    title: str
    run: Callable[[], tuple[str, str, bool]]


def _diag_strip() -> HPolyhedron:
    """x1 + x2 >= 1 together with |x1 - x2| <= 1; the running 2-D example."""
    return hpolyhedron(
        2, [halfspace([-1, -1], -1), halfspace([1, -1], 1), halfspace([-1, 1], 1)]
    )


def _sum_3d_sets() -> tuple[LatticeSet, LatticeSet]:
    return lattice_set(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]), lattice_set(3, [(0, 0, 0), (1, 1, 1)])


def _hole_2d_sets() -> tuple[LatticeSet, LatticeSet]:
    return lattice_set(2, [(0, 0), (1, 1)]), lattice_set(2, [(1, 0), (0, 1)])


def _cone_4d() -> HPolyhedron:
    return cone_from_generators(4, [(1, 1, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])


def _triangle_plus_diag() -> HPolyhedron:
    return to_hrep(vpolyhedron(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(1, 1, 1)]))


def _parallelogram_pair() -> tuple[LNatSystem, LNatSystem]:
    # segment (0,0,0)-(1,1,0) and segment (0,0,0)-(0,1,1), as bound/difference systems
    seg1 = LNatSystem(
        3,
        lower={0: 0, 1: 0, 2: 0},
        upper={0: 1, 1: 1, 2: 0},
        edges={(0, 1): 0, (1, 0): 0},
    )
    seg2 = LNatSystem(
        3,
        lower={0: 0, 1: 0, 2: 0},
        upper={0: 0, 1: 1, 2: 1},
        edges={(1, 2): 0, (2, 1): 0},
    )
    return seg1, seg2


def _ok(expected: str, computed: str) -> tuple[str, str, bool]:
    return expected, computed, expected == computed


def _fx_lp_unbounded():
    res = lp_solve(_diag_strip(), (1, 1), "max")
    return _ok("unbounded along (1, 1)", f"{res[0]} along {tuple(map(int, res[1]))}" if res[0] == "unbounded" else res[0])


def _fx_vrep_strip():
    v = to_vrep(_diag_strip())
    comp = f"vertices {sorted(tuple(map(int, x)) for x in v.vertices)} rays {sorted(tuple(map(int, r)) for r in v.rays)}"
    return _ok("vertices [(0, 1), (1, 0)] rays [(1, 1)]", comp)


def _fx_hrep_simplex():
    hull = to_hrep(vpolyhedron(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    want = hpolyhedron(
        3,
        [
            halfspace([1, 1, 1], 1, "="),
            halfspace([-1, 0, 0], 0),
            halfspace([0, -1, 0], 0),
            halfspace([0, 0, -1], 0),
        ],
    )
    return _ok("hull equals the standard simplex system", "equal" if polyhedra_equal(hull, want) else "different")


def _fx_intersect_triangle():
    seg1, seg2 = _parallelogram_pair()
    para = to_hrep(minkowski_sum_polyhedra(to_vrep(lnat_to_hrep(seg1)), to_vrep(lnat_to_hrep(seg2))))
    tri = intersect_box(para, IntegralBox((0, 0, 0), (1, 1, 1)))
    verts = sorted(tuple(map(int, v)) for v in to_vrep(tri).vertices)
    return _ok("triangle [(0, 0, 0), (0, 1, 1), (1, 1, 0)]", f"triangle {verts}")


def _fx_point_in_sum_hull():
    s1, s2 = _sum_3d_sets()
    hull = to_hrep(minkowski_sum_sets(s1, s2).hull_vrep())
    x = point(1, Fraction(1, 2), 1)
    return _ok("contained", "contained" if contains_point(hull, x) else "missing")


def _fx_equal_recomposition():
    p = _diag_strip()
    bounded, cone = decompose_polyhedron(p)
    recomposed = to_hrep(minkowski_sum_polyhedra(to_vrep(bounded), to_vrep(cone)))
    return _ok("recomposition equals input", "equal" if polyhedra_equal(recomposed, p) else "different")


def _fx_minkowski_square():
    v = minkowski_sum_polyhedra(
        vpolyhedron(2, [(0, 0), (1, 1)]), vpolyhedron(2, [(1, 0), (0, 1)])
    )
    comp = sorted(tuple(map(int, x)) for x in v.vertices)
    return _ok("[(0, 1), (1, 0), (1, 2), (2, 1)]", str(comp))


def _fx_minkowski_triangle_ray():
    tri = vpolyhedron(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    ray = vpolyhedron(3, [(0, 0, 0)], [(1, 1, 1)])
    summed = to_hrep(minkowski_sum_polyhedra(tri, ray))
    return _ok(
        "sum equals triangle-plus-diagonal region",
        "equal" if polyhedra_equal(summed, _triangle_plus_diag()) else "different",
    )


def _fx_integer_polyhedron_strip():
    return _ok("integer polyhedron", "integer polyhedron" if is_integer_polyhedron(_diag_strip()) else "not integer")


def _fx_bounding_box_segment():
    box = bounding_box(vpolyhedron(2, [(1, 0), (0, 1)]))
    return _ok("l=(0, 0) u=(1, 1)", f"l={box.lower} u={box.upper}")


def _fx_neighborhood_3d():
    n = integral_neighborhood(point(1, Fraction(1, 2), 1))
    return _ok("[(1, 0, 1), (1, 1, 1)]", str(n.sorted_points()))


def _fx_neighborhood_4d():
    n = integral_neighborhood(point(1, 1, 1, Fraction(3, 2)))
    return _ok("[(1, 1, 1, 1), (1, 1, 1, 2)]", str(n.sorted_points()))


def _fx_hull_points_2d():
    s1, s2 = _hole_2d_sets()
    pts = integer_points(to_hrep(minkowski_sum_sets(s1, s2).hull_vrep()))
    return _ok("[(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]", str(pts.sorted_points()))


def _fx_holefree_sum_2d():
    s1, s2 = _hole_2d_sets()
    return _ok("not hole-free", "hole-free" if is_hole_free(minkowski_sum_sets(s1, s2)) else "not hole-free")


def _fx_sum_sets_2d():
    s1, s2 = _hole_2d_sets()
    return _ok(
        "[(0, 1), (1, 0), (1, 2), (2, 1)]", str(minkowski_sum_sets(s1, s2).sorted_points())
    )


def _fx_sum_sets_3d():
    s1, s2 = _sum_3d_sets()
    return _ok(
        "[(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1)]",
        str(minkowski_sum_sets(s1, s2).sorted_points()),
    )


def _fx_holes_2d():
    s1, s2 = _hole_2d_sets()
    return _ok("[(1, 1)]", str(find_minkowski_holes(s1, s2).sorted_points()))


def _fx_holes_mnat():
    simplex = lattice_set(2, [(0, 0), (1, 0), (0, 1)])
    return _ok("[]", str(find_minkowski_holes(simplex, simplex).sorted_points()))


def _fx_holes_lnat():
    c1 = lattice_set(2, [(0, 0), (1, 1)])
    c2 = lattice_set(2, [(0, 0), (0, 1)])
    return _ok("[]", str(find_minkowski_holes(c1, c2).sorted_points()))


def _fx_truncate_full():
    g = GeneratedSet(lattice_set(2, [(1, 0), (0, 1), (1, 1)]), ((1, 1),))
    w = Window((0, 0), (3, 3))
    same = truncate(g, w).points == integer_points(_diag_strip(), w).points
    return _ok("window matches the strip", "match" if same else "mismatch")


def _fx_truncate_diagonal_holes():
    g = GeneratedSet(lattice_set(2, [(1, 0), (0, 1)]), ((1, 1),))
    w = Window((0, 0), (3, 3))
    missing = sorted(integer_points(_diag_strip(), w).points - truncate(g, w).points)
    return _ok("[(1, 1), (2, 2), (3, 3)]", str(missing))


def _fx_ic_01_subsets():
    pts = list(product((0, 1), repeat=2))
    bad = 0
    for r in range(1, 5):
        for sub in combinations(pts, r):
            if not is_integrally_convex(lattice_set(2, sub)):
                bad += 1
    return _ok("all 15 subsets integrally convex", f"all 15 subsets integrally convex" if bad == 0 else f"{bad} failures")


def _fx_ic_3d_counterexample():
    s1, s2 = _sum_3d_sets()
    s = integer_points(to_hrep(minkowski_sum_sets(s1, s2).hull_vrep()))
    verdict = is_integrally_convex(s)
    x = point(1, Fraction(1, 2), 1)
    nbhd = integral_neighborhood(x)
    facts = (
        not verdict.ok
        and nbhd.points == {(1, 0, 1), (1, 1, 1)}
        and (s.points & nbhd.points) == {(1, 1, 1)}
        and contains_point(to_hrep(s.hull_vrep()), x)
        and not in_convex_hull(x, [p for p in s.points & nbhd.points])
    )
    return _ok("not integrally convex; witness facts hold", "not integrally convex; witness facts hold" if facts else "facts failed")


def _fx_ic_remark_T():
    w = Window((0, 0, 0), (2, 2, 2))
    t = integer_points(_triangle_plus_diag(), w)
    verdict = is_integrally_convex(t)
    return _ok("not integrally convex", "integrally convex" if verdict.ok else "not integrally convex")


def _fx_boxint_strip():
    verdict = is_box_integer_within(_diag_strip(), Window((-1, -1), (3, 3)))
    return _ok("box-integer on the window", "box-integer on the window" if verdict.ok else "fails")


def _fx_boxint_cone4d():
    verdict = is_box_integer_within(_cone_4d(), Window((0, 0, 0, 0), (2, 2, 2, 2)))
    x = point(1, 1, 1, Fraction(3, 2))
    ok = (
        not verdict.ok
        and verdict.witness is not None
        and all(c <= xi <= c + 1 for c, xi in zip(verdict.witness.cell, x))
        and not any(_cone_4d().contains_int_point(z) for z in integral_neighborhood(x).points)
    )
    return _ok("fails; witness cell holds the half-integer point", "fails; witness cell holds the half-integer point" if ok else "unexpected")


def _fx_boxint_triangle_diag():
    verdict = is_box_integer_within(_triangle_plus_diag(), Window((0, 0, 0), (2, 2, 2)))
    return _ok("not box-integer", "box-integer" if verdict.ok else "not box-integer")


def _fx_char_cone_strip():
    cone = char_cone(_diag_strip())
    want = cone_from_generators(2, [(1, 1)])
    return _ok("cone is the diagonal ray", "cone is the diagonal ray" if polyhedra_equal(cone, want) else "different")


def _fx_char_cone_class_lnat():
    sys = LNatSystem(2, lower={0: 0}, edges={(0, 1): 1, (1, 0): 1})
    cone = char_cone_class(sys)
    want = LNatSystem(2, lower={0: 0}, edges={(0, 1): 0, (1, 0): 0})
    return _ok("zeroed system", "zeroed system" if cone == want else str(cone))


def _fx_unit_generators_ray():
    gens = cone_unit_generators(char_cone(_diag_strip()))
    return _ok("[(1, 1)]", str(gens))


def _fx_decompose_strip():
    bounded, cone = decompose_polyhedron(_diag_strip())
    verts = sorted(tuple(map(int, v)) for v in to_vrep(bounded).vertices)
    cone_ok = polyhedra_equal(cone, cone_from_generators(2, [(1, 1)]))
    return _ok(
        "bounded part [(0, 1), (1, 0), (1, 1)]; cone is the diagonal ray",
        f"bounded part {verts}; cone is the diagonal ray" if cone_ok else "cone mismatch",
    )


def _fx_decompose_set_strip():
    result = decompose_set(_diag_strip())
    w = Window((-2, -2), (6, 6))
    ok = (
        result.generators == ((1, 1),)
        and {(1, 0), (0, 1), (1, 1)} <= result.base.points
        and truncate(result, w).points == integer_points(_diag_strip(), w).points
    )
    return _ok("base + diagonal generator reproduce the set", "base + diagonal generator reproduce the set" if ok else "mismatch")


def _fx_conic_diag():
    g = GeneratedSet(lattice_set(2, [(0, 0)]), ((1, 1),))
    return _ok("conic", "conic" if is_conic(g) else "not conic")


def _fx_verify_decomposition_strip():
    result = decompose_set(_diag_strip())
    ok = verify_decomposition(_diag_strip(), result, Window((-3, -3), (5, 5)))
    return _ok("verified", "verified" if ok else "failed")


def _fx_mnat_simplex_set():
    return _ok("exchange holds", "exchange holds" if is_mnat_set(lattice_set(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) else "fails")


def _fx_lnat2_triangle_poly():
    seg1, seg2 = _parallelogram_pair()
    _, verdict = box_intersect_class((seg1, seg2), IntegralBox((0, 0, 0), (1, 1, 1)), ClassTag.LNAT2)
    return _ok("intersection flagged outside the class", "intersection flagged outside the class" if not verdict else "verdict true")


def _fx_lnat2_triangle_set():
    tri = lattice_set(3, [(0, 0, 0), (0, 1, 1), (1, 1, 0)])
    return _ok("no two-summand decomposition", "no two-summand decomposition" if not is_lnat2_set(tri) else "decomposable")


def _fx_lnat2_summandwise():
    seg1, seg2 = _parallelogram_pair()
    dec = decompose_class_polyhedron((seg1, seg2), ClassTag.LNAT2)
    dset = decompose_class_set((seg1, seg2), ClassTag.LNAT2)
    return _ok("summand-wise decompositions verified", "summand-wise decompositions verified" if dec.ok and dset.ok else "failed")


def _fx_separate_vertex():
    b = separate_cube_subset([], (1, 1))
    ok = b == [(1, 1)] and verify_cube_separation([], (1, 1), b)
    return _ok("single-vertex separation", "single-vertex separation" if ok else str(b))


FIXTURES: list[Fixture] = [
    Fixture("lp-unbounded-diagonal", "LP over the diagonal strip is unbounded along (1,1)", _fx_lp_unbounded),
    Fixture("vrep-diagonal-strip", "vertex description of the diagonal strip", _fx_vrep_strip),
    Fixture("hrep-unit-simplex", "inequality description of the unit simplex hull", _fx_hrep_simplex),
    Fixture("intersect-parallelogram-box", "parallelogram clipped to the unit box is a triangle", _fx_intersect_triangle),
    Fixture("contains-midpoint-3d", "(1, 1/2, 1) lies in the 3-D sum hull", _fx_point_in_sum_hull),
    Fixture("equal-recomposition", "bounded part + cone equals the strip", _fx_equal_recomposition),
    Fixture("minkowski-square", "discrete segment sum gives the tilted square", _fx_minkowski_square),
    Fixture("minkowski-triangle-ray", "triangle plus diagonal ray", _fx_minkowski_triangle_ray),
    Fixture("integer-polyhedron-strip", "the strip is an integer polyhedron", _fx_integer_polyhedron_strip),
    Fixture("bounding-box-segment", "bounding box of the unit segment", _fx_bounding_box_segment),
    Fixture("neighborhood-3d", "integral neighborhood of (1, 1/2, 1)", _fx_neighborhood_3d),
    Fixture("neighborhood-4d", "integral neighborhood of (1, 1, 1, 3/2)", _fx_neighborhood_4d),
    Fixture("hull-points-2d", "hull of the 2-D sum regains the hole", _fx_hull_points_2d),
    Fixture("sum-sets-2d", "discrete 2-D Minkowski sum", _fx_sum_sets_2d),
    Fixture("sum-sets-3d", "discrete 3-D Minkowski sum", _fx_sum_sets_3d),
    Fixture("holefree-sum-2d", "the 2-D sum is not hole-free", _fx_holefree_sum_2d),
    Fixture("holes-2d", "hole of the 2-D sum sits at (1,1)", _fx_holes_2d),
    Fixture("holes-exchange-family", "two exchange-closed simplices sum without holes", _fx_holes_mnat),
    Fixture("holes-midpoint-family", "two midpoint-closed chains sum without holes", _fx_holes_lnat),
    Fixture("truncate-strip", "base plus diagonal generator reproduces the strip", _fx_truncate_full),
    Fixture("truncate-diagonal-holes", "dropping (1,1) from the base leaves diagonal holes", _fx_truncate_diagonal_holes),
    Fixture("ic-01-subsets", "every subset of {0,1}^2 is integrally convex", _fx_ic_01_subsets),
    Fixture("ic-3d-counterexample", "hull points of the 3-D sum are not integrally convex", _fx_ic_3d_counterexample),
    Fixture("ic-triangle-diag-points", "integer points of triangle+ray are not integrally convex", _fx_ic_remark_T),
    Fixture("boxint-strip", "the strip hull is box-integer on a window", _fx_boxint_strip),
    Fixture("boxint-cone-4d", "the 4-D unit-generated cone is not box-integer", _fx_boxint_cone4d),
    Fixture("boxint-triangle-diag", "triangle plus diagonal ray is not box-integer", _fx_boxint_triangle_diag),
    Fixture("char-cone-strip", "characteristic cone of the strip is the diagonal ray", _fx_char_cone_strip),
    Fixture("char-cone-class-lnat", "class cone zeroes the right-hand sides", _fx_char_cone_class_lnat),
    Fixture("unit-generators-ray", "unit generators of the diagonal-ray cone", _fx_unit_generators_ray),
    Fixture("decompose-strip", "polyhedral decomposition of the strip", _fx_decompose_strip),
    Fixture("decompose-set-strip", "set decomposition of the strip", _fx_decompose_set_strip),
    Fixture("conic-diagonal", "the diagonal generated set is conic", _fx_conic_diag),
    Fixture("verify-decomposition-strip", "full verification harness on the strip", _fx_verify_decomposition_strip),
    Fixture("mnat-simplex-set", "unit simplex points satisfy the exchange axiom", _fx_mnat_simplex_set),
    Fixture("lnat2-triangle-poly", "clipped parallelogram leaves the two-summand class", _fx_lnat2_triangle_poly),
    Fixture("lnat2-triangle-set", "triangle point set has no two-summand decomposition", _fx_lnat2_triangle_set),
    Fixture("lnat2-summand-wise", "summand-wise decomposition recomposes exactly", _fx_lnat2_summandwise),
    Fixture("separate-cube-vertex", "cube separation at a vertex target", _fx_separate_vertex),
]


def fixture_ids() -> list[str]:
    return [f.id for f in FIXTURES]


def run_fixture(f: Fixture) -> dict:
    expected, computed, ok = f.run()
    return {"id": f.id, "title": f.title, "expected": expected, "computed": computed, "pass": ok}
