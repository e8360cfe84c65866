"""Exact two-phase simplex over Fractions (Bland's rule, deterministic).

Independent of the double-description machinery on purpose: LP results and
vertex enumerations cross-check each other in the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import Point, primitive, scale_to_int


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    rowr = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [v - f * w for v, w in zip(row, rowr)]
    basis[r] = c


def _optimize(tab, basis, ncols_allowed) -> tuple[str, int | None]:
    """Minimize the last row; Bland's rule, so cycling is impossible."""
    while True:
        obj = tab[-1]
        enter = next((j for j in range(ncols_allowed) if obj[j] < 0), None)
        if enter is None:
            return "optimal", None
        leave = None
        best: Fraction | None = None
        for i in range(len(tab) - 1):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded", enter
        _pivot(tab, basis, leave, enter)


def solve_standard(
    eq: list[list[Fraction]], rhs: list[Fraction], cost: list[Fraction]
) -> tuple[str, list[Fraction] | None, list[Fraction] | None]:
    """min cost . y subject to eq y = rhs, y >= 0.

    Returns (status, y, ray): status in {"optimal", "unbounded", "infeasible"};
    on "unbounded", ray is a feasible recession direction with cost . ray < 0.
    """
    m = len(eq)
    n = len(cost)
    rows = []
    b = []
    for i in range(m):
        if rhs[i] < 0:
            rows.append([-v for v in eq[i]])
            b.append(-rhs[i])
        else:
            rows.append(list(eq[i]))
            b.append(rhs[i])

    # phase I: artificial basis
    total = n + m
    tab = [rows[i] + [Fraction(int(j == i)) for j in range(m)] + [b[i]] for i in range(m)]
    obj = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= tab[i][j]
        obj[total] -= tab[i][total]
    tab.append(obj)
    basis = [n + i for i in range(m)]
    _optimize(tab, basis, n)
    if tab[-1][-1] != 0:
        return "infeasible", None, None

    # drive artificials out of the basis; redundant rows get flagged
    drop: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            c = next((j for j in range(n) if tab[i][j] != 0), None)
            if c is None:
                drop.append(i)
            else:
                _pivot(tab, basis, i, c)
    keep = [i for i in range(m) if i not in drop]
    tab = [[tab[i][j] for j in range(n)] + [tab[i][total]] for i in keep]
    basis = [basis[i] for i in keep]

    obj = list(cost) + [Fraction(0)]
    for i, bv in enumerate(basis):
        if cost[bv] != 0:
            f = cost[bv]
            obj = [v - f * w for v, w in zip(obj, tab[i])]
    tab.append(obj)
    status, enter = _optimize(tab, basis, n)
    if status == "unbounded":
        ray = [Fraction(0)] * n
        ray[enter] = Fraction(1)
        for i, bv in enumerate(basis):
            ray[bv] = -tab[i][enter]
        return "unbounded", None, ray
    y = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        y[bv] = tab[i][-1]
    return "optimal", y, None


def feasible_nonneg(eq: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Some y >= 0 with eq y = rhs, or None."""
    n = len(eq[0]) if eq else 0
    status, y, _ = solve_standard(eq, rhs, [Fraction(0)] * n)
    return y if status == "optimal" else None


def in_convex_hull(x: Point, points: list[Point]) -> bool:
    """Exact membership of x in the convex hull of finitely many points."""
    if not points:
        return False
    n = len(x)
    eq = [[Fraction(p[i]) for p in points] for i in range(n)]
    eq.append([Fraction(1)] * len(points))
    rhs = [Fraction(v) for v in x] + [Fraction(1)]
    return feasible_nonneg(eq, rhs) is not None


def in_cone_hull(v, generators) -> bool:
    """Exact membership of v in the conic hull of finitely many generators."""
    n = len(v)
    if not generators:
        return all(c == 0 for c in v)
    eq = [[Fraction(g[i]) for g in generators] for i in range(n)]
    rhs = [Fraction(c) for c in v]
    return feasible_nonneg(eq, rhs) is not None


def _split_rows(dim: int, rows):
    """Translate (normal, offset, rel) rows to standard form with x = u - w."""
    eq: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    nslack = sum(1 for hs in rows if hs.rel == "<=")
    slack_idx = 0
    n = 2 * dim + nslack
    for hs in rows:
        coeffs = [Fraction(0)] * n
        for i, a in enumerate(hs.normal):
            coeffs[i] = Fraction(a)
            coeffs[dim + i] = -Fraction(a)
        if hs.rel == "<=":
            coeffs[2 * dim + slack_idx] = Fraction(1)
            slack_idx += 1
        eq.append(coeffs)
        rhs.append(Fraction(hs.offset))
    return eq, rhs, n


def lp_over_rows(dim: int, rows, c: Point, sense: str):
    """max/min of c . x over {x : rows hold}.

    Returns ("optimal", value, point) | ("unbounded", ray) | ("infeasible",).
    The unbounded ray is primitive-integer and improving for the sense.
    """
    eq, rhs, n = _split_rows(dim, rows)
    sign = -1 if sense == "max" else 1
    cost = [Fraction(0)] * n
    for i, ci in enumerate(c):
        cost[i] = sign * Fraction(ci)
        cost[dim + i] = -sign * Fraction(ci)
    status, y, ray = solve_standard(eq, rhs, cost)
    if status == "infeasible":
        return ("infeasible",)
    if status == "unbounded":
        d = tuple(ray[i] - ray[dim + i] for i in range(dim))
        return ("unbounded", tuple(Fraction(v) for v in primitive(scale_to_int(d))))
    x = tuple(y[i] - y[dim + i] for i in range(dim))
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return ("optimal", value, x)


def feasible_point(dim: int, rows) -> Point | None:
    eq, rhs, n = _split_rows(dim, rows)
    y = feasible_nonneg(eq, rhs)
    if y is None:
        return None
    return tuple(y[i] - y[dim + i] for i in range(dim))
