# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Same functions, arguments and results as ``_pykernels``."""

import numpy as np

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

cdef extern from "math.h" nogil:
    bint isfinite(double)

WINTER = 0
DOUBLE = 1
TRIPLE = 2

CONVERGED = 0
MAX_ITER = 1
BASIN_ESCAPE = 2
ZERO_DERIVATIVE = 3
STAGNATED = 4
NONFINITE = 5

FLOOR_ULPS = 16.0
EPS = 2.220446049250313e-16

NAME = "cython"

cdef enum:
    CONVERGED_C = 0
    MAX_ITER_C = 1
    BASIN_ESCAPE_C = 2
    ZERO_DERIVATIVE_C = 3
    STAGNATED_C = 4

cdef double _FLOOR = 16.0 * 2.220446049250313e-16


cdef inline void _residual(int model, double complex w, double complex c1,
                           double complex c2, double complex c3,
                           double complex* f, double complex* df,
                           double* scale) nogil:
    cdef double complex e = cexp(w)
    cdef double complex zw, p, q, s1, s2, s3, a, b, t1, t2, t3, c, dc, e2
    if model == 0:
        zw = c1 * w
        f[0] = e - zw - 1.0
        df[0] = e - c1
        scale[0] = cabs(e) + cabs(zw) + 1.0
        return
    if model == 1:
        p = 1.0 + c1 * w
        q = 1.0 + c2 * w
        f[0] = e - p * q
        df[0] = e - c1 * q - c2 * p
        scale[0] = cabs(e) + cabs(p) * cabs(q)
        return
    # f' = (a' + 2a) e^{2w} - (b' + b) e^w + c', with a' = -z0, b' = z- + z+
    s1 = c1 + c2 + c3
    s2 = c1 * c2 + c1 * c3 + c2 * c3
    s3 = c1 * c2 * c3
    a = 1.0 - c2 * w
    b = 2.0 + (c1 + c3) * w
    t1 = s1 * w
    t2 = s2 * w * w
    t3 = s3 * w * w * w
    c = 1.0 + t1 + t2 + t3
    dc = s1 + 2.0 * s2 * w + 3.0 * s3 * w * w
    e2 = e * e
    f[0] = a * e2 - b * e + c
    df[0] = (2.0 * a - c2) * e2 - (b + c1 + c3) * e + dc
    scale[0] = (cabs(a) * cabs(e2) + cabs(b) * cabs(e) + 1.0
                + cabs(t1) + cabs(t2) + cabs(t3))


cdef inline bint _cfinite(double complex x) nogil:
    return isfinite(creal(x)) and isfinite(cimag(x))


def residual(int model, double complex w, double complex c1,
             double complex c2, double complex c3):
    cdef double complex f, df
    cdef double scale
    _residual(model, w, c1, c2, c3, &f, &df, &scale)
    return f, df, scale


def newton(int model, double complex c1, double complex c2, double complex c3,
           double complex seed, double tol, int max_iter, double basin,
           int max_halvings):
    cdef double complex w = seed, f, df, step, wt, ft, dft
    cdef double scale, st, fn, ftn, lam
    cdef int it = 0, h, status = -1
    cdef bint accepted, polished
    with nogil:
        _residual(model, w, c1, c2, c3, &f, &df, &scale)
        fn = cabs(f)
    if not isfinite(fn):
        return w, 0, fn, NONFINITE
    with nogil:
        while True:
            polished = fn < _FLOOR * (scale + cabs(df) * cabs(w))
            if fn < tol:
                status = CONVERGED_C
                break
            if it >= max_iter:
                status = CONVERGED_C if polished else MAX_ITER_C
                break
            if df == 0:
                status = CONVERGED_C if polished else ZERO_DERIVATIVE_C
                break
            step = f / df
            lam = 1.0
            accepted = False
            for h in range(max_halvings + 1):
                wt = w - lam * step
                _residual(model, wt, c1, c2, c3, &ft, &dft, &st)
                ftn = cabs(ft)
                if _cfinite(ft) and ftn < fn:
                    accepted = True
                    break
                lam *= 0.5
            if not accepted:
                status = CONVERGED_C if polished else STAGNATED_C
                break
            w = wt
            f = ft
            df = dft
            scale = st
            fn = ftn
            it += 1
            if cabs(w - seed) > basin:
                status = BASIN_ESCAPE_C
                break
    return w, it, fn, status


def series_mul(const double complex[:] a, const double complex[:] b):
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[:] o = out
    cdef double complex acc
    for k in range(n):
        acc = 0
        for j in range(k + 1):
            acc = acc + a[j] * b[k - j]
        o[k] = acc
    return out


def series_div(const double complex[:] a, const double complex[:] b):
    cdef Py_ssize_t n = a.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[:] q = out
    cdef double complex acc, b0 = b[0]
    for k in range(n):
        acc = a[k]
        for j in range(1, k + 1):
            acc = acc - b[j] * q[k - j]
        q[k] = acc / b0
    return out


def series_log(const double complex[:] s, double complex log0):
    cdef Py_ssize_t n = s.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[:] o = out
    cdef double complex acc, s0 = s[0]
    o[0] = log0
    for k in range(1, n):
        acc = k * s[k]
        for j in range(1, k):
            acc = acc - j * o[j] * s[k - j]
        o[k] = acc / (k * s0)
    return out


def series_exp(const double complex[:] s, double complex exp0):
    cdef Py_ssize_t n = s.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[:] o = out
    cdef double complex acc
    o[0] = exp0
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            acc = acc + j * s[j] * o[k - j]
        o[k] = acc / k
    return out


def series_sqrt(const double complex[:] s, double complex root0):
    cdef Py_ssize_t n = s.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[:] o = out
    cdef double complex acc
    o[0] = root0
    for k in range(1, n):
        acc = s[k]
        for j in range(1, k):
            acc = acc - o[j] * o[k - j]
        o[k] = acc / (2.0 * root0)
    return out
