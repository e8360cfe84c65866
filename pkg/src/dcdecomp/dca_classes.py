"""Inequality-described discrete convexity classes and class-preserving
decompositions.

Two base families carry explicit descriptions: difference/bound systems
(LNatSystem) and paramodular pairs (ParamodularPair).  The composite families
are explicit pairs: a sum of two systems, or an intersection of two pairs.
Recognizing composite membership of a bare point set is supported only
through bounded search (see is_lnat2_set).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import (
    ClassVerificationFailure,
    DimensionCapExceeded,
    EmptyPolyhedron,
    UnsupportedTag,
)
from .exactgeom import (
    Halfspace,
    HPolyhedron,
    IntegralBox,
    bounding_box,
    halfspace,
    intersect,
    intersect_box,
    is_empty,
    minkowski_sum_polyhedra,
    polyhedra_equal,
    to_hrep,
    to_vrep,
)
from .iconvex import char_cone, cone_unit_generators
from .lattice import (
    GeneratedSet,
    LatticeSet,
    Window,
    integer_points,
    minkowski_sum_sets,
    truncate,
)
from .rationals import IntVec

MNAT_DIM_CAP = 5


class ClassTag(enum.Enum):
    LNAT = "lnat"
    L = "l"
    LNAT2 = "lnat2"
    MNAT = "mnat"
    M = "m"
    MNAT2 = "mnat2"


def parse_tag(name: str) -> ClassTag:
    try:
        return ClassTag(name.lower())
    except ValueError:
        raise UnsupportedTag(f"unknown class tag {name!r}") from None


@dataclass(frozen=True)
class LNatSystem:
    """Bounds and difference constraints: l_i <= x_i, x_j <= u_j,
    x_j - x_i <= d_ij.  Missing entries mean no constraint."""

    dim: int
    lower: dict[int, int] = field(default_factory=dict)
    upper: dict[int, int] = field(default_factory=dict)
    edges: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for i in list(self.lower) + list(self.upper):
            if not 0 <= i < self.dim:
                raise ValueError(f"index {i} out of range for dimension {self.dim}")
        for i, j in self.edges:
            if i == j:
                raise ValueError("difference constraints need i != j")
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"edge ({i},{j}) out of range")


@dataclass(frozen=True)
class ParamodularPair:
    """Submodular upper table rho and supermodular lower table mu over subset
    bitmasks; absent masks are +inf / -inf, the empty set is pinned to 0."""

    dim: int
    rho: dict[int, int] = field(default_factory=dict)
    mu: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        full = 1 << self.dim
        for mask in list(self.rho) + list(self.mu):
            if not 0 <= mask < full:
                raise ValueError(f"subset mask {mask} out of range")


def lnat_to_hrep(sys: LNatSystem) -> HPolyhedron:
    """Exact row translation of the bound/difference system."""
    rows: list[Halfspace] = []
    n = sys.dim
    for i in sorted(sys.lower):
        normal = [0] * n
        normal[i] = -1
        rows.append(halfspace(normal, -sys.lower[i]))
    for j in sorted(sys.upper):
        normal = [0] * n
        normal[j] = 1
        rows.append(halfspace(normal, sys.upper[j]))
    for (i, j) in sorted(sys.edges):
        normal = [0] * n
        normal[j] = 1
        normal[i] = -1
        rows.append(halfspace(normal, sys.edges[(i, j)]))
    return HPolyhedron(n, tuple(rows))


def mnat_to_hrep(pair: ParamodularPair) -> HPolyhedron:
    """One row per finite table entry: mu(X) <= x(X) <= rho(X)."""
    if pair.dim > MNAT_DIM_CAP:
        raise DimensionCapExceeded(f"paramodular dimension {pair.dim} exceeds cap {MNAT_DIM_CAP}")
    rows: list[Halfspace] = []
    n = pair.dim
    for mask in sorted(pair.rho):
        if mask == 0:
            continue
        normal = [1 if mask >> i & 1 else 0 for i in range(n)]
        rows.append(halfspace(normal, pair.rho[mask]))
    for mask in sorted(pair.mu):
        if mask == 0:
            continue
        normal = [-1 if mask >> i & 1 else 0 for i in range(n)]
        rows.append(halfspace(normal, -pair.mu[mask]))
    return HPolyhedron(n, tuple(rows))


def _ext_add(a: int | None, b: int | None) -> int | None:
    return None if a is None or b is None else a + b


def is_paramodular(pair: ParamodularPair) -> bool:
    """Enumerated check: submodular rho, supermodular mu, cross-inequality."""
    if pair.rho.get(0, 0) != 0 or pair.mu.get(0, 0) != 0:
        return False
    full = 1 << pair.dim
    rho = {m: pair.rho.get(m) for m in range(full)}
    mu = {m: pair.mu.get(m) for m in range(full)}
    rho[0] = 0
    mu[0] = 0
    for x in range(full):
        for y in range(full):
            lhs = _ext_add(rho[x], rho[y])
            rhs = _ext_add(rho[x | y], rho[x & y])
            if lhs is not None and (rhs is None or lhs < rhs):
                return False
            lhs = _ext_add(mu[x], mu[y])
            rhs = _ext_add(mu[x | y], mu[x & y])
            if lhs is not None and (rhs is None or lhs > rhs):
                return False
            # rho(X) - mu(Y) >= rho(X \ Y) - mu(Y \ X)
            if rho[x] is None or mu[y] is None:
                continue
            r2 = rho[x & ~y]
            m2 = mu[y & ~x]
            if r2 is None or m2 is None:
                return False
            if rho[x] - mu[y] < r2 - m2:
                return False
    return True


def is_lnat_set(s: LatticeSet) -> bool:
    """Discrete midpoint closure: both roundings of (p+q)/2 stay in the set."""
    pts = s.points
    for p in pts:
        for q in pts:
            up = tuple(-((-a - b) // 2) for a, b in zip(p, q))
            down = tuple((a + b) // 2 for a, b in zip(p, q))
            if up not in pts or down not in pts:
                return False
    return True


def is_mnat_set(s: LatticeSet) -> bool:
    """Exchange axiom: p_i > q_i admits a step p -> p - e_i (+ e_j) matched by
    q -> q + e_i (- e_j) staying in the set."""
    pts = s.points
    n = s.dim
    for p in pts:
        for q in pts:
            for i in range(n):
                if p[i] <= q[i]:
                    continue
                pm = _shift(p, i, -1)
                qp = _shift(q, i, +1)
                if pm in pts and qp in pts:
                    continue
                ok = False
                for j in range(n):
                    if p[j] < q[j]:
                        if _shift(pm, j, +1) in pts and _shift(qp, j, -1) in pts:
                            ok = True
                            break
                if not ok:
                    return False
    return True


def _shift(p: IntVec, i: int, delta: int) -> IntVec:
    q = list(p)
    q[i] += delta
    return tuple(q)


def is_m_set(s: LatticeSet) -> bool:
    sums = {sum(p) for p in s.points}
    return len(sums) <= 1 and is_mnat_set(s)


def is_lnat2_set(s: LatticeSet, max_size: int = 10) -> bool:
    """Bounded search for a two-summand decomposition with midpoint-closed
    parts.  Exponential in |S|; capped to keep the search honest and finite."""
    pts = s.sorted_points()
    if not pts:
        return False
    if len(pts) > max_size:
        raise ValueError(f"decomposition search capped at {max_size} points, got {len(pts)}")
    if is_lnat_set(s):
        return True
    m = pts[0]
    ground = [tuple(a - b for a, b in zip(p, m)) for p in pts]  # candidates for both parts
    sset = s.points
    for r2 in range(len(pts), 0, -1):
        for c2 in combinations(pts, r2):
            if m not in c2:
                continue
            if not is_lnat_set(LatticeSet(s.dim, frozenset(c2))):
                continue
            shifted = [frozenset(tuple(a - b for a, b in zip(p, t)) for p in pts) for t in c2]
            allowed = frozenset.intersection(*shifted)
            zero = (0,) * s.dim
            if zero not in allowed:
                continue
            cand = sorted(allowed)
            for r1 in range(1, len(cand) + 1):
                for c1 in combinations(cand, r1):
                    if zero not in c1:
                        continue
                    if not is_lnat_set(LatticeSet(s.dim, frozenset(c1))):
                        continue
                    total = {tuple(a + b for a, b in zip(p, q)) for p in c1 for q in c2}
                    if total == sset:
                        return True
    return False


def char_cone_class(rep):
    """Class-preserving characteristic cone: zero out all finite constants.

    Cross-checked against the generic characteristic cone of the H-rep."""
    if isinstance(rep, LNatSystem):
        cone = LNatSystem(
            rep.dim,
            {i: 0 for i in rep.lower},
            {j: 0 for j in rep.upper},
            {e: 0 for e in rep.edges},
        )
        got = lnat_to_hrep(cone)
        want = char_cone(lnat_to_hrep(rep))
    elif isinstance(rep, ParamodularPair):
        cone = ParamodularPair(
            rep.dim,
            {m: 0 for m in rep.rho if m != 0},
            {m: 0 for m in rep.mu if m != 0},
        )
        got = mnat_to_hrep(cone)
        want = char_cone(mnat_to_hrep(rep))
    else:
        raise UnsupportedTag(f"no class cone for {type(rep).__name__}")
    if not polyhedra_equal(got, want):
        raise ClassVerificationFailure("class cone disagrees with the generic characteristic cone")
    return cone


def _rep_to_hrep(rep, tag: ClassTag) -> HPolyhedron:
    if tag in (ClassTag.LNAT, ClassTag.L):
        return lnat_to_hrep(rep)
    if tag in (ClassTag.MNAT, ClassTag.M):
        return mnat_to_hrep(rep)
    raise UnsupportedTag(f"tag {tag.value} needs a pair of summand/factor systems")


def _set_membership(tag: ClassTag):
    return {
        ClassTag.LNAT: is_lnat_set,
        ClassTag.MNAT: is_mnat_set,
        ClassTag.M: is_m_set,
    }[tag]


@dataclass(frozen=True)
class ClassDecomposition:
    """Class-preserving split: bounded part plus a cone of the same class."""

    tag: ClassTag
    bounded_part: HPolyhedron
    cone_part: HPolyhedron
    cone_rep: object
    certificates: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.certificates.values())


def _require_nonempty(p: HPolyhedron) -> None:
    if is_empty(p):
        raise EmptyPolyhedron("class decomposition needs a nonempty polyhedron")


def decompose_class_polyhedron(rep, tag: ClassTag, dim_cap: int | None = None) -> ClassDecomposition:
    """Bounded part + cone, staying inside the input's class.

    Box intersection preserves every supported class except the two-summand
    sums, which are decomposed summand-wise instead."""
    if tag == ClassTag.L:
        raise UnsupportedTag(
            "no bounded part exists for this tag: the polyhedron is invariant "
            "along the all-ones direction, so decompose the quotient instead"
        )
    if tag == ClassTag.LNAT2:
        return _decompose_lnat2_polyhedron(rep, dim_cap)
    if tag == ClassTag.MNAT2:
        return _decompose_mnat2_polyhedron(rep, dim_cap)
    p = _rep_to_hrep(rep, tag)
    _require_nonempty(p)
    cone_rep = char_cone_class(rep)
    cone = lnat_to_hrep(cone_rep) if isinstance(cone_rep, LNatSystem) else mnat_to_hrep(cone_rep)
    box = bounding_box(to_vrep(p, dim_cap))
    bounded = intersect_box(p, box)
    certs = {
        "bounded_class": _set_membership(tag)(integer_points(bounded, dim_cap=dim_cap)),
        "recomposition": polyhedra_equal(
            to_hrep(minkowski_sum_polyhedra(to_vrep(bounded, dim_cap), to_vrep(cone, dim_cap)), dim_cap),
            p,
            dim_cap,
        ),
    }
    return ClassDecomposition(tag, bounded, cone, cone_rep, certs)


def _cone_sum(c1: HPolyhedron, c2: HPolyhedron, dim_cap) -> HPolyhedron:
    v1, v2 = to_vrep(c1, dim_cap), to_vrep(c2, dim_cap)
    return to_hrep(minkowski_sum_polyhedra(v1, v2), dim_cap)


def _decompose_lnat2_polyhedron(pair_of_sys, dim_cap) -> ClassDecomposition:
    sys1, sys2 = pair_of_sys
    p1, p2 = lnat_to_hrep(sys1), lnat_to_hrep(sys2)
    _require_nonempty(p1)
    _require_nonempty(p2)
    parts = []
    for sys, p in ((sys1, p1), (sys2, p2)):
        cone_rep = char_cone_class(sys)
        box = bounding_box(to_vrep(p, dim_cap))
        parts.append((intersect_box(p, box), lnat_to_hrep(cone_rep), cone_rep))
    bounded = to_hrep(
        minkowski_sum_polyhedra(to_vrep(parts[0][0], dim_cap), to_vrep(parts[1][0], dim_cap)), dim_cap
    )
    cone = _cone_sum(parts[0][1], parts[1][1], dim_cap)
    total = to_hrep(minkowski_sum_polyhedra(to_vrep(p1, dim_cap), to_vrep(p2, dim_cap)), dim_cap)
    t1 = integer_points(parts[0][0], dim_cap=dim_cap)
    t2 = integer_points(parts[1][0], dim_cap=dim_cap)
    certs = {
        "bounded_class_summand_1": is_lnat_set(t1),
        "bounded_class_summand_2": is_lnat_set(t2),
        "recomposition": polyhedra_equal(
            to_hrep(minkowski_sum_polyhedra(to_vrep(bounded, dim_cap), to_vrep(cone, dim_cap)), dim_cap),
            total,
            dim_cap,
        ),
    }
    return ClassDecomposition(ClassTag.LNAT2, bounded, cone, (parts[0][2], parts[1][2]), certs)


def _decompose_mnat2_polyhedron(pair_of_pairs, dim_cap) -> ClassDecomposition:
    pr1, pr2 = pair_of_pairs
    p1, p2 = mnat_to_hrep(pr1), mnat_to_hrep(pr2)
    p = intersect(p1, p2)
    _require_nonempty(p)
    cone1, cone2 = char_cone_class(pr1), char_cone_class(pr2)
    cone = intersect(mnat_to_hrep(cone1), mnat_to_hrep(cone2))
    box = bounding_box(to_vrep(p, dim_cap))
    bounded = intersect_box(p, box)
    t1 = integer_points(intersect_box(p1, box), dim_cap=dim_cap)
    t2 = integer_points(intersect_box(p2, box), dim_cap=dim_cap)
    t = integer_points(bounded, dim_cap=dim_cap)
    certs = {
        "bounded_class_factor_1": is_mnat_set(t1),
        "bounded_class_factor_2": is_mnat_set(t2),
        "bounded_is_factor_intersection": t.points == (t1.points & t2.points),
        "recomposition": polyhedra_equal(
            to_hrep(minkowski_sum_polyhedra(to_vrep(bounded, dim_cap), to_vrep(cone, dim_cap)), dim_cap),
            p,
            dim_cap,
        ),
    }
    return ClassDecomposition(ClassTag.MNAT2, bounded, cone, (cone1, cone2), certs)


@dataclass(frozen=True)
class ClassSetDecomposition:
    tag: ClassTag
    result: GeneratedSet
    certificates: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.certificates.values())


def _generic_set_parts(p: HPolyhedron, dim_cap):
    cone = char_cone(p)
    gens = cone_unit_generators(cone, dim_cap)
    box = bounding_box(to_vrep(p, dim_cap)).inflate(len(gens))
    base = integer_points(intersect_box(p, box), dim_cap=dim_cap)
    window = bounding_box(to_vrep(p, dim_cap)).inflate(len(gens) + 2)
    return gens, box, base, window


def decompose_class_set(rep, tag: ClassTag, dim_cap: int | None = None) -> ClassSetDecomposition:
    """Set-level class-preserving decomposition: base + (cone ∩ Z^n).

    The base is re-verified with the class membership test; a failure raises
    ClassVerificationFailure since it would contradict class closure under
    box intersection."""
    if tag == ClassTag.L:
        raise UnsupportedTag(
            "no bounded part exists for this tag: sets are invariant along "
            "the all-ones direction"
        )
    if tag == ClassTag.LNAT2:
        return _decompose_lnat2_set(rep, dim_cap)
    if tag == ClassTag.MNAT2:
        return _decompose_mnat2_set(rep, dim_cap)
    p = _rep_to_hrep(rep, tag)
    _require_nonempty(p)
    gens, box, base, window = _generic_set_parts(p, dim_cap)
    if not _set_membership(tag)(base):
        raise ClassVerificationFailure("bounded part failed its class membership test")
    result = GeneratedSet(base, tuple(gens))
    certs = {
        "base_class": True,
        "windowed_equality": truncate(result, window, dim_cap).points
        == integer_points(p, window, dim_cap).points,
    }
    return ClassSetDecomposition(tag, result, certs)


def _decompose_lnat2_set(pair_of_sys, dim_cap) -> ClassSetDecomposition:
    sys1, sys2 = pair_of_sys
    p1, p2 = lnat_to_hrep(sys1), lnat_to_hrep(sys2)
    _require_nonempty(p1)
    _require_nonempty(p2)
    bases = []
    gens: list[IntVec] = []
    for p in (p1, p2):
        g, box, base, _ = _generic_set_parts(p, dim_cap)
        if not is_lnat_set(base):
            raise ClassVerificationFailure("summand base failed the midpoint-closure test")
        bases.append(base)
        for v in g:
            if v not in gens:
                gens.append(v)
    base = minkowski_sum_sets(bases[0], bases[1])
    result = GeneratedSet(base, tuple(gens))
    total = to_hrep(minkowski_sum_polyhedra(to_vrep(p1, dim_cap), to_vrep(p2, dim_cap)), dim_cap)
    window = bounding_box(to_vrep(total, dim_cap)).inflate(len(gens) + 2)
    certs = {
        "summand_base_class_1": True,
        "summand_base_class_2": True,
        "windowed_equality": truncate(result, window, dim_cap).points
        == integer_points(total, window, dim_cap).points,
    }
    return ClassSetDecomposition(ClassTag.LNAT2, result, certs)


def _decompose_mnat2_set(pair_of_pairs, dim_cap) -> ClassSetDecomposition:
    pr1, pr2 = pair_of_pairs
    p1, p2 = mnat_to_hrep(pr1), mnat_to_hrep(pr2)
    p = intersect(p1, p2)
    _require_nonempty(p)
    gens, box, base, window = _generic_set_parts(p, dim_cap)
    t1 = integer_points(intersect_box(p1, box), dim_cap=dim_cap)
    t2 = integer_points(intersect_box(p2, box), dim_cap=dim_cap)
    if not (is_mnat_set(t1) and is_mnat_set(t2)):
        raise ClassVerificationFailure("factor base failed the exchange test")
    if base.points != (t1.points & t2.points):
        raise ClassVerificationFailure("base is not the intersection of the factor bases")
    result = GeneratedSet(base, tuple(gens))
    certs = {
        "factor_base_class_1": True,
        "factor_base_class_2": True,
        "windowed_equality": truncate(result, window, dim_cap).points
        == integer_points(p, window, dim_cap).points,
    }
    return ClassSetDecomposition(ClassTag.MNAT2, result, certs)


def box_intersect_class(rep, box: IntegralBox, tag: ClassTag, dim_cap: int | None = None):
    """Intersect with an integral box and report a verified class verdict for
    the resulting (finite) point set."""
    if tag == ClassTag.LNAT2:
        sys1, sys2 = rep
        p = to_hrep(
            minkowski_sum_polyhedra(to_vrep(lnat_to_hrep(sys1), dim_cap), to_vrep(lnat_to_hrep(sys2), dim_cap)),
            dim_cap,
        )
        inter = intersect_box(p, box)
        pts = integer_points(inter, dim_cap=dim_cap)
        return inter, is_lnat2_set(pts)
    if tag == ClassTag.MNAT2:
        pr1, pr2 = rep
        p1, p2 = mnat_to_hrep(pr1), mnat_to_hrep(pr2)
        inter = intersect_box(intersect(p1, p2), box)
        t1 = integer_points(intersect_box(p1, box), dim_cap=dim_cap)
        t2 = integer_points(intersect_box(p2, box), dim_cap=dim_cap)
        t = integer_points(inter, dim_cap=dim_cap)
        verdict = is_mnat_set(t1) and is_mnat_set(t2) and t.points == (t1.points & t2.points)
        return inter, verdict
    if tag == ClassTag.L:
        raise UnsupportedTag("no finite membership test for this tag")
    p = _rep_to_hrep(rep, tag)
    inter = intersect_box(p, box)
    pts = integer_points(inter, dim_cap=dim_cap)
    if not pts.points:
        return inter, True
    return inter, _set_membership(tag)(pts)
