"""Constructive separation on the 0/1 cube, with an exact verifier.

Given R inside X = {0,1}^m and a target d in conv(X) \\ conv(R), produce an
ordered B = [d^1, ..., d^l] disjoint from R with d outside conv(X \\ B),
conv(B) disjoint from conv(X \\ B), and the chain property
conv({d^1..d^i}) ∩ conv({d^i..d^l} ∪ (X \\ B)) = {d^i} for every i.

The separating functional comes from an exact LP with unit margins; ties over
the cube are broken symbolically by a secondary weight vector (3^0, 3^1, ...),
compared lexicographically, so the construction is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import _simplex
from .errors import DimensionCapExceeded, DInConvR
from .rationals import IntVec, Point, dot, is_integral, point

DEFAULT_CUBE_CAP = 6


def _cube(m: int) -> list[IntVec]:
    return sorted(product((0, 1), repeat=m))


def _check_inputs(r_set, d: Point, cap: int | None) -> int:
    m = len(d)
    cap = DEFAULT_CUBE_CAP if cap is None else cap
    if m > cap:
        raise DimensionCapExceeded(f"cube dimension {m} exceeds cap {cap}")
    if not all(0 <= c <= 1 for c in d):
        raise ValueError("target must lie in the unit cube")
    for r in r_set:
        if len(r) != m or any(v not in (0, 1) for v in r):
            raise ValueError(f"{r} is not a 0/1 vector of dimension {m}")
    if r_set and _simplex.in_convex_hull(d, [point(r) for r in r_set]):
        raise DInConvR("target lies in the hull of the excluded points")
    return m


def _weights(m: int, base: int = 3) -> tuple[int, ...]:
    return tuple(base**i for i in range(m))


def separate_cube_subset(
    r_set, d, cube_cap: int | None = None
) -> list[IntVec]:
    """Ordered separating subset B of {0,1}^m for (R, d); see module docstring."""
    d = point(d)
    r_set = [tuple(int(v) for v in r) for r in r_set]
    m = _check_inputs(r_set, d, cube_cap)
    cube = _cube(m)

    if is_integral(d):
        return [tuple(int(c) for c in d)]

    if not r_set:
        # pick a weight base whose valuation separates d from every cube point
        base = 3
        while True:
            w = _weights(m, base)
            wd = dot(tuple(Fraction(v) for v in w), d)
            if all(Fraction(sum(wi * xi for wi, xi in zip(w, x))) != wd for x in cube):
                break
            base += 2
        chosen = [x for x in cube if sum(wi * xi for wi, xi in zip(w, x)) > wd]
        chosen.sort(key=lambda x: sum(wi * xi for wi, xi in zip(w, x)), reverse=True)
        return chosen

    # exact separating functional with unit margins: a.r <= t - 1, a.d >= t + 1
    from .exactgeom import Halfspace

    rows = [Halfspace(point(list(r) + [-1]), Fraction(-1)) for r in r_set]
    rows.append(Halfspace(tuple(-c for c in d) + (Fraction(1),), Fraction(-1)))
    sol = _simplex.feasible_point(m + 1, rows)
    assert sol is not None, "separation LP must be feasible when d is outside conv(R)"
    a, thr = sol[:m], sol[m]

    w = _weights(m)
    chosen = [x for x in cube if dot(a, point(x)) > thr]
    chosen.sort(key=lambda x: (dot(a, point(x)), sum(wi * xi for wi, xi in zip(w, x))), reverse=True)
    return chosen


def _hulls_disjoint(pts1: list[Point], pts2: list[Point], m: int) -> bool:
    if not pts1 or not pts2:
        return True
    eq: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k in range(m):
        eq.append([Fraction(p[k]) for p in pts1] + [-Fraction(q[k]) for q in pts2])
        rhs.append(Fraction(0))
    eq.append([Fraction(1)] * len(pts1) + [Fraction(0)] * len(pts2))
    rhs.append(Fraction(1))
    eq.append([Fraction(0)] * len(pts1) + [Fraction(1)] * len(pts2))
    rhs.append(Fraction(1))
    return _simplex.feasible_nonneg(eq, rhs) is None


def _intersection_is_single(pts1: list[Point], pts2: list[Point], target: Point, m: int) -> bool:
    """conv(pts1) ∩ conv(pts2) == {target}, checked by extremizing every
    coordinate of the intersection."""
    n1, n2 = len(pts1), len(pts2)
    eq: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k in range(m):
        eq.append([Fraction(p[k]) for p in pts1] + [-Fraction(q[k]) for q in pts2])
        rhs.append(Fraction(0))
    eq.append([Fraction(1)] * n1 + [Fraction(0)] * n2)
    rhs.append(Fraction(1))
    eq.append([Fraction(0)] * n1 + [Fraction(1)] * n2)
    rhs.append(Fraction(1))
    for k in range(m):
        for sign in (1, -1):
            cost = [sign * Fraction(p[k]) for p in pts1] + [Fraction(0)] * n2
            status, y, _ = _simplex.solve_standard(eq, rhs, cost)
            if status != "optimal":
                return False
            value = sum(c * v for c, v in zip(cost, y))
            if value != sign * Fraction(target[k]):
                return False
    return True


def verify_cube_separation(r_set, d, b_ordered, cube_cap: int | None = None) -> bool:
    """Exact check of all four separation conditions for an ordered B."""
    d = point(d)
    r_set = {tuple(int(v) for v in r) for r in r_set}
    m = len(d)
    cap = DEFAULT_CUBE_CAP if cube_cap is None else cube_cap
    if m > cap:
        raise DimensionCapExceeded(f"cube dimension {m} exceeds cap {cap}")
    b_list = [tuple(int(v) for v in x) for x in b_ordered]
    cube = set(_cube(m))
    if not b_list or len(set(b_list)) != len(b_list) or not set(b_list) <= cube:
        return False
    bset = set(b_list)
    if r_set & bset:
        return False
    rest = sorted(cube - bset)
    rest_pts = [point(x) for x in rest]
    if rest_pts and _simplex.in_convex_hull(d, rest_pts):
        return False
    if not _hulls_disjoint([point(x) for x in b_list], rest_pts, m):
        return False
    for i in range(len(b_list)):
        head = [point(x) for x in b_list[: i + 1]]
        tail = [point(x) for x in b_list[i:]] + rest_pts
        if not _intersection_is_single(head, tail, point(b_list[i]), m):
            return False
    return True
