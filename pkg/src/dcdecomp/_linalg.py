"""Small exact linear algebra utilities (Fraction matrices, integer lattices)."""

from __future__ import annotations

from fractions import Fraction

from .rationals import primitive


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace_int(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {y : row . y = 0 for all rows}, in a
    deterministic (free-variable) order."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    mat, pivots = rref([[Fraction(v) for v in row] for row in rows])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * dim
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        mult = 1
        for v in vec:
            mult = mult * v.denominator // _gcd(mult, v.denominator)
        basis.append(primitive(tuple(int(v * mult) for v in vec)))
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def invert(mat: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Exact inverse of a square Fraction matrix, or None if singular."""
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def hnf_column(mat: list[list[int]]) -> list[list[int]]:
    """Column-style Hermite normal form of an integer matrix (lower triangular
    up to column permutation of zeros); unimodular column operations only."""
    m = [row[:] for row in mat]
    if not m:
        return m
    nrows, ncols = len(m), len(m[0])
    col = 0
    for row in range(nrows):
        if col >= ncols:
            break
        # use the Euclidean algorithm across columns col..ncols-1 on this row
        while True:
            nz = [j for j in range(col, ncols) if m[row][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(m[row][j]))
            if jmin != col:
                for i in range(nrows):
                    m[i][col], m[i][jmin] = m[i][jmin], m[i][col]
            if m[row][col] < 0:
                for i in range(nrows):
                    m[i][col] = -m[i][col]
            done = True
            for j in range(col + 1, ncols):
                q = m[row][j] // m[row][col]
                if q:
                    for i in range(nrows):
                        m[i][j] -= q * m[i][col]
                if m[row][j] != 0:
                    done = False
            if done:
                break
        if m[row][col] != 0:
            col += 1
    return m


def lattice_contains(mat: list[list[int]], target: list[int]) -> bool:
    """Is target an integer combination of the columns of mat?"""
    h = hnf_column(mat)
    t = list(target)
    nrows = len(t)
    ncols = len(h[0]) if h else 0
    col = 0
    for row in range(nrows):
        if col < ncols and h[row][col] != 0:
            q, r = divmod(t[row], h[row][col])
            if r != 0:
                return False
            for i in range(nrows):
                t[i] -= q * h[i][col]
            col += 1
        elif t[row] != 0:
            return False
    return all(v == 0 for v in t)
