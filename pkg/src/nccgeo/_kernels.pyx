# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled de Sitter grid-scan kernels (hot loops of the verification
suites).  Signature-compatible with nccgeo._kernels_py."""

from libc.math cimport cosh, fabs, sin, sinh

import numpy as np

cimport numpy as cnp

cnp.import_array()

COMPILED = True


def wedge_scan(double[:, ::1] pts, double band):
    cdef Py_ssize_t i, n = pts.shape[0]
    cdef double margin
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] view = out
    for i in range(n):
        margin = pts[i, 1] - fabs(pts[i, 0])
        if margin > band:
            view[i] = 1
        elif margin < -band:
            view[i] = 0
        else:
            view[i] = -1
    return out


def kms_scan(double[:, ::1] pts, int n_grid, double band, double eq_tol):
    cdef Py_ssize_t i, k, n = pts.shape[0]
    cdef double t, st, y0, y1, step
    cdef double pi = 3.141592653589793238462643383279502884
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] view = out
    step = (pi - 2.0 * band) / (n_grid - 1)
    for i in range(n):
        view[i] = 1
        for k in range(n_grid):
            t = band + step * k
            st = sin(t)
            y0 = st * pts[i, 1]
            y1 = st * pts[i, 0]
            if not (y0 > eq_tol and y0 * y0 > y1 * y1 + eq_tol * eq_tol):
                view[i] = 0
                break
    return out


def observer_scan(double[:, ::1] pts, double t_max, int n_grid, double eq_tol):
    cdef Py_ssize_t i, k, j, n = pts.shape[0], dim = pts.shape[1]
    cdef double t, step, g0, g1, v0, beta
    cdef bint down, up
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] view = out
    step = 2.0 * t_max / (n_grid - 1)
    for i in range(n):
        down = False
        up = False
        for k in range(n_grid):
            t = -t_max + step * k
            g0 = sinh(t)
            g1 = cosh(t)
            v0 = pts[i, 0] - g0
            beta = v0 * v0 - (pts[i, 1] - g1) * (pts[i, 1] - g1)
            for j in range(2, dim):
                beta -= pts[i, j] * pts[i, j]
            if beta >= -eq_tol:
                if v0 >= -eq_tol:
                    down = True
                if -v0 >= -eq_tol:
                    up = True
                if down and up:
                    break
        view[i] = 1 if (down and up) else 0
    return out


def causal_batch(double[:, ::1] x, double[:, ::1] y, double eq_tol):
    cdef Py_ssize_t i, j, n = x.shape[0], dim = x.shape[1]
    cdef double v0, beta, vj
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] view = out
    for i in range(n):
        v0 = y[i, 0] - x[i, 0]
        beta = v0 * v0
        for j in range(1, dim):
            vj = y[i, j] - x[i, j]
            beta -= vj * vj
        view[i] = 1 if (v0 >= -eq_tol and beta >= -eq_tol) else 0
    return out
