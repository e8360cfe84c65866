"""Exact representation conversion via the double description method.

Cones are handled as {y : r . y >= 0 for all rows r} over integer rows.  The
lineality space is split off first so the insertion kernel always works on a
pointed cone, where the combinatorial adjacency test is valid.  Rows are
inserted in lexicographic order, so outputs are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from ._ddcore import insert_halfspace
from ._linalg import invert, nullspace_int
from .rationals import IntVec, Point, primitive, scale_to_int


def _canonical_sign(vec: IntVec) -> IntVec:
    for v in vec:
        if v > 0:
            return vec
        if v < 0:
            return tuple(-x for x in vec)
    return vec


def cone_generators(rows: list[IntVec], dim: int) -> tuple[list[IntVec], list[IntVec]]:
    """Generators of {y in R^dim : row . y >= 0 for all rows}.

    Returns (pointed_rays, lineality_basis), both primitive integer vectors in
    sorted order; the cone is cone(pointed_rays) + span(lineality_basis).
    """
    rows = [tuple(r) for r in rows if any(r)]
    lineality = [_canonical_sign(b) for b in nullspace_int(rows, dim)]
    ext = set(rows)
    for b in lineality:
        ext.add(b)
        ext.add(tuple(-v for v in b))
    ordered = sorted(ext)

    # greedy full-rank starting basis in lexicographic row order
    basis_rows: list[IntVec] = []
    basis_frac: list[list[Fraction]] = []
    rest: list[IntVec] = []
    for row in ordered:
        if len(basis_rows) < dim:
            cand = basis_frac + [[Fraction(v) for v in row]]
            if _rank(cand) == len(cand):
                basis_rows.append(row)
                basis_frac.append([Fraction(v) for v in row])
                continue
        rest.append(row)
    if len(basis_rows) < dim:
        raise AssertionError("lineality removal failed to produce full row rank")

    inv = invert(basis_frac)
    assert inv is not None
    rays: list[IntVec] = []
    zsets: list[int] = []
    full = (1 << dim) - 1
    for j in range(dim):
        col = primitive(scale_to_int([inv[i][j] for i in range(dim)]))
        rays.append(col)
        zsets.append(full & ~(1 << j))

    processed: list[IntVec] = list(basis_rows)
    for row in rest:
        rays, zsets = insert_halfspace(rays, zsets, processed, row)
        processed.append(row)
        if not rays:
            break
    return sorted(rays), sorted(lineality)


def _rank(rows: list[list[Fraction]]) -> int:
    mat = [r[:] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][c] != 0:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def homogenize_rows(dim: int, rows) -> list[IntVec] | None:
    """Integer rows (b, -a) of the homogenization cone of {x : rows}.

    Equality rows become opposite pairs.  Returns None when a row is
    unsatisfiable outright (zero normal with negative offset).
    """
    out: list[IntVec] = []
    for hs in rows:
        scaled = scale_to_int((hs.offset, *hs.normal))
        hrow = (scaled[0],) + tuple(-v for v in scaled[1:])
        if not any(hrow[1:]):
            if hrow[0] < 0:
                return None
            if hs.rel == "=" and hrow[0] != 0:
                return None
            continue
        out.append(hrow)
        if hs.rel == "=":
            out.append(tuple(-v for v in hrow))
    return out


def vrep_from_hrep(dim: int, rows) -> tuple[list[Point], list[IntVec], list[IntVec]]:
    """Vertices, recession rays, and lineality basis of {x : rows hold}.

    Empty polyhedron yields no vertices.  Vertices are exact rational points;
    rays and lineality are primitive integer vectors.
    """
    hrows = homogenize_rows(dim, rows)
    if hrows is None:
        return [], [], []
    e0 = (1,) + (0,) * dim
    gens, lineality = cone_generators(hrows + [e0], dim + 1)
    vertices: list[Point] = []
    rays: list[IntVec] = []
    for g in gens:
        if g[0] > 0:
            vertices.append(tuple(Fraction(v, g[0]) for v in g[1:]))
        else:
            rays.append(primitive(g[1:]))
    lin: list[IntVec] = []
    for b in lineality:
        assert b[0] == 0
        lin.append(primitive(b[1:]))
    if not vertices:
        return [], [], []
    return sorted(vertices), sorted(rays), sorted(lin)


def hrep_from_generators(dim: int, vertices, rays) -> list[tuple[Point, Fraction, str]]:
    """Inequality description of conv(vertices) + cone(rays).

    Returns (normal, offset, rel) triples with rel in {"<=", "="}; trivial
    all-zero normals are dropped.
    """
    polar_rows: list[IntVec] = []
    for v in vertices:
        polar_rows.append(primitive(scale_to_int((Fraction(1), *v))))
    for r in rays:
        polar_rows.append(primitive(scale_to_int((Fraction(0), *r))))
    gens, lineality = cone_generators(polar_rows, dim + 1)
    out: list[tuple[Point, Fraction, str]] = []
    for w in gens:
        normal = tuple(Fraction(-v) for v in w[1:])
        if not any(normal):
            continue
        out.append((normal, Fraction(w[0]), "<="))
    for w in lineality:
        normal = tuple(Fraction(-v) for v in w[1:])
        if not any(normal):
            continue
        out.append((normal, Fraction(w[0]), "="))
    return sorted(out)
