# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled double-description insertion kernel (twin of _dd_py).

Arithmetic stays on Python ints (no overflow risk for exact rational data);
Cython removes the interpreter overhead of the pairing loops.
"""

from math import gcd

BACKEND = "cython"


cdef object _dot(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    s = 0
    for i in range(n):
        s += a[i] * b[i]
    return s


cdef tuple _primitive(tuple vec):
    cdef Py_ssize_t i, n = len(vec)
    g = 0
    for i in range(n):
        g = gcd(g, vec[i])
    if g > 1:
        return tuple([v // g for v in vec])
    return vec


def insert_halfspace(list rays, list zsets, list processed, tuple row):
    """See _dd_py.insert_halfspace; identical contract and output order."""
    cdef Py_ssize_t dim = len(row)
    cdef Py_ssize_t nproc = len(processed)
    cdef Py_ssize_t nrays = len(rays)
    cdef Py_ssize_t i, k, pi, ni, idx
    newbit = 1 << nproc

    cdef list dots = [None] * nrays
    for i in range(nrays):
        dots[i] = _dot(row, <tuple>rays[i])

    cdef list keep_rays = []
    cdef list keep_z = []
    cdef list pos = []
    cdef list neg = []
    for i in range(nrays):
        d = dots[i]
        if d > 0:
            pos.append(i)
            keep_rays.append(rays[i])
            keep_z.append(zsets[i])
        elif d == 0:
            keep_rays.append(rays[i])
            keep_z.append(zsets[i] | newbit)
        else:
            neg.append(i)

    cdef Py_ssize_t npos = len(pos), nneg = len(neg)
    cdef bint adjacent
    for pi in range(npos):
        p = pos[pi]
        zp = zsets[p]
        dp = dots[p]
        rp = <tuple>rays[p]
        for ni in range(nneg):
            n = neg[ni]
            zc = zp & zsets[n]
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
            rn = <tuple>rays[n]
            new = _primitive(tuple([dp * rn[i] - dn * rp[i] for i in range(dim)]))
            z = newbit
            for idx in range(nproc):
                if _dot(<tuple>processed[idx], new) == 0:
                    z |= 1 << idx
            keep_rays.append(new)
            keep_z.append(z)
    return keep_rays, keep_z
