"""Pure-Python kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here with the same signature and return values.

Model codes: 0 = single barrier (``c1 = z``), 1 = double barrier
(``c1 = z0, c2 = z+``), 2 = triple barrier (``c1 = z-, c2 = z0, c3 = z+``).
"""

import cmath
import math

import numpy as np

WINTER = 0
DOUBLE = 1
TRIPLE = 2

CONVERGED = 0
MAX_ITER = 1
BASIN_ESCAPE = 2
ZERO_DERIVATIVE = 3
STAGNATED = 4
NONFINITE = 5

# round-off floor of |f(w)| in ulps: evaluation error (summed term magnitudes)
# plus the granularity of w itself (|f'| |w|)
FLOOR_ULPS = 16.0
EPS = 2.220446049250313e-16

NAME = "python"


def _exp(w):
    try:
        return cmath.exp(w)
    except OverflowError:
        return complex(math.inf, math.inf)


def residual(model, w, c1, c2, c3):
    """Residual, its w-derivative and the magnitude scale of the summed terms."""
    e = _exp(w)
    if model == WINTER:
        zw = c1 * w
        return e - zw - 1.0, e - c1, abs(e) + abs(zw) + 1.0
    if model == DOUBLE:
        p = 1.0 + c1 * w
        q = 1.0 + c2 * w
        return e - p * q, e - c1 * q - c2 * p, abs(e) + abs(p) * abs(q)
    # a e^{2w} - b e^w + c, with a, b, c polynomial in w:
    #   a = 1 - z0 w,            a' = -z0
    #   b = 2 + (z- + z+) w,     b' = z- + z+
    #   c = 1 + s1 w + s2 w^2 + s3 w^3,  c' = s1 + 2 s2 w + 3 s3 w^2
    # so f' = (a' + 2a) e^{2w} - (b' + b) e^w + c'
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
    f = a * e2 - b * e + c
    df = (2.0 * a - c2) * e2 - (b + c1 + c3) * e + dc
    scale = abs(a) * abs(e2) + abs(b) * abs(e) + 1.0 + abs(t1) + abs(t2) + abs(t3)
    return f, df, scale


def _finite(x):
    return math.isfinite(x.real) and math.isfinite(x.imag)


def newton(model, c1, c2, c3, seed, tol, max_iter, basin, max_halvings):
    """Damped Newton iteration from ``seed``.

    Returns ``(w, iterations, |residual|, status)``. A trial step is halved
    (at most ``max_halvings`` times) while it fails to reduce ``|residual|``.
    Convergence means ``|residual| < tol``, or that the residual is within
    the round-off floor and no step reduces it further.
    """
    w = seed
    f, df, scale = residual(model, w, c1, c2, c3)
    fn = abs(f)
    if not math.isfinite(fn):
        return w, 0, fn, NONFINITE
    it = 0
    while True:
        # below the round-off floor, keep polishing until no step helps
        polished = fn < FLOOR_ULPS * EPS * (scale + abs(df) * abs(w))
        if fn < tol:
            return w, it, fn, CONVERGED
        if it >= max_iter:
            return w, it, fn, CONVERGED if polished else MAX_ITER
        if df == 0:
            return w, it, fn, CONVERGED if polished else ZERO_DERIVATIVE
        step = f / df
        lam = 1.0
        accepted = False
        for _ in range(max_halvings + 1):
            wt = w - lam * step
            ft, dft, st = residual(model, wt, c1, c2, c3)
            ftn = abs(ft)
            if _finite(ft) and ftn < fn:
                accepted = True
                break
            lam *= 0.5
        if not accepted:
            return w, it, fn, CONVERGED if polished else STAGNATED
        w, f, df, scale, fn = wt, ft, dft, st, ftn
        it += 1
        if abs(w - seed) > basin:
            return w, it, fn, BASIN_ESCAPE


def _aslist(a):
    return a.tolist() if isinstance(a, np.ndarray) else list(a)


def series_mul(a, b):
    a, b = _aslist(a), _aslist(b)
    n = len(a)
    out = [0j] * n
    for k in range(n):
        acc = 0j
        for j in range(k + 1):
            acc += a[j] * b[k - j]
        out[k] = acc
    return np.array(out, dtype=complex)


def series_div(a, b):
    a, b = _aslist(a), _aslist(b)
    n = len(a)
    q = [0j] * n
    b0 = b[0]
    for k in range(n):
        acc = a[k]
        for j in range(1, k + 1):
            acc -= b[j] * q[k - j]
        q[k] = acc / b0
    return np.array(q, dtype=complex)


def series_log(s, log0):
    # s = exp(L)  =>  k s_k = sum_{j=1..k} j L_j s_{k-j}
    s = _aslist(s)
    n = len(s)
    out = [0j] * n
    out[0] = log0
    s0 = s[0]
    for k in range(1, n):
        acc = k * s[k]
        for j in range(1, k):
            acc -= j * out[j] * s[k - j]
        out[k] = acc / (k * s0)
    return np.array(out, dtype=complex)


def series_exp(s, exp0):
    # E = exp(s)  =>  k E_k = sum_{j=1..k} j s_j E_{k-j}
    s = _aslist(s)
    n = len(s)
    out = [0j] * n
    out[0] = exp0
    for k in range(1, n):
        acc = 0j
        for j in range(1, k + 1):
            acc += j * s[j] * out[k - j]
        out[k] = acc / k
    return np.array(out, dtype=complex)


def series_sqrt(s, root0):
    s = _aslist(s)
    n = len(s)
    out = [0j] * n
    out[0] = root0
    for k in range(1, n):
        acc = s[k]
        for j in range(1, k):
            acc -= out[j] * out[k - j]
        out[k] = acc / (2.0 * root0)
    return np.array(out, dtype=complex)
