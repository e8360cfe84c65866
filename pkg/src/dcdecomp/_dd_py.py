"""Pure-Python double-description insertion kernel.

This is the reference implementation of the hot loop; ``_dd_cy`` is the
compiled twin with identical semantics.  ``_ddcore`` picks one at import.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def _dot(a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def _primitive(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def insert_halfspace(rays, zsets, processed, row):
    """Intersect a pointed cone with {y : row . y >= 0}.

    rays: extreme rays (integer tuples) of the current cone; zsets: parallel
    bitmasks, bit i set iff processed[i] . ray == 0; processed: rows already
    inserted, excluding ``row``.  Returns (rays, zsets) of the refined cone;
    ``row`` takes bitmask index len(processed).  Output order: surviving rays
    first (input order), then combined rays by (positive, negative) pair order.
    """
    dim = len(row)
    nproc = len(processed)
    newbit = 1 << nproc
    dots = [_dot(row, r) for r in rays]

    keep_rays = []
    keep_z = []
    pos = []
    neg = []
    for i, d in enumerate(dots):
        if d > 0:
            pos.append(i)
            keep_rays.append(rays[i])
            keep_z.append(zsets[i])
        elif d == 0:
            keep_rays.append(rays[i])
            keep_z.append(zsets[i] | newbit)
        else:
            neg.append(i)

    nrays = len(rays)
    for p in pos:
        zp = zsets[p]
        dp = dots[p]
        rp = rays[p]
        for n in neg:
            zc = zp & zsets[n]
            # a shared face of a pointed cone needs >= dim-2 tight rows
            if zc.bit_count() < dim - 2:
                continue
            adjacent = True
            for k in range(nrays):
                if k != p and k != n and zc & ~zsets[k] == 0:
                    adjacent = False
                    break
            if not adjacent:
                continue
            dn = dots[n]
            rn = rays[n]
            new = _primitive(tuple(dp * b - dn * a for a, b in zip(rp, rn)))
            z = newbit
            for idx in range(nproc):
                if _dot(processed[idx], new) == 0:
                    z |= 1 << idx
            keep_rays.append(new)
            keep_z.append(z)
    return keep_rays, keep_z
