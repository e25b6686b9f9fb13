# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled core for the numeric hot loops.

Keep this file in lockstep with ``_kernels_py.py``: same algorithms,
same order of floating-point operations, so the two backends agree to
the last bit on the same platform.
"""

from libc.math cimport fabs, pow, sqrt

from .errors import ConvergenceError

GSERIES_REL_TOL = 1e-15
GSERIES_MAX_TERMS = 1_000_000
ALTERNATING_TERMS = 40


def g_series_sum(double q, double z, double order,
                 double rel_tol=1e-15, long max_terms=1_000_000):
    """Sum_{r>=1} [r]_q z^r / r^(order+1), for 0 < z < q <= 1."""
    cdef double expo = order + 1.0
    cdef double s = 0.0
    cdef double zr, term, denom, u, v, ur, vr
    cdef long r
    if q == 1.0:
        zr = 1.0
        for r in range(1, max_terms + 1):
            zr *= z
            term = zr / pow(<double> r, order)
            s += term
            if fabs(term) < rel_tol * fabs(s):
                return s
        raise ConvergenceError(
            f"series for (q=1, z={z}, order={order}) not converged "
            f"after {max_terms} terms"
        )
    denom = q - 1.0 / q
    u = q * z
    v = z / q
    ur = 1.0
    vr = 1.0
    for r in range(1, max_terms + 1):
        ur *= u
        vr *= v
        term = ((ur - vr) / denom) / pow(<double> r, expo)
        s += term
        if fabs(term) < rel_tol * fabs(s):
            return s
    raise ConvergenceError(
        f"series for (q={q}, z={z}, order={order}) not converged "
        f"after {max_terms} terms"
    )


def f_series_sum(double x, double order, int n_terms=40):
    """Accelerated alternating sum Sum_{r>=1} (-1)^(r+1) x^r / r^order."""
    cdef double d = pow(3.0 + sqrt(8.0), <double> n_terms)
    cdef double b = -1.0
    cdef double c, s, xk
    cdef int k
    d = (d + 1.0 / d) / 2.0
    c = -d
    s = 0.0
    xk = 1.0
    for k in range(n_terms):
        c = b - c
        xk *= x
        s += c * (xk / pow(k + 1.0, order))
        b = (k + n_terms) * (k - n_terms) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def cf_convergent_value(double y, long k):
    """k-th convergent of y/(1 - 1^2 y/(2 - 1^2 y/(3 - 2^2 y/(4 - ...))))."""
    cdef double a_prev = 1.0, a_cur = 0.0
    cdef double b_prev = 0.0, b_cur = 1.0
    cdef double num, den, scale, tmp
    cdef long j, half
    for j in range(1, k + 1):
        if j == 1:
            num = y
        else:
            half = j // 2
            num = -(<double> (half * half)) * y
        den = <double> j
        tmp = den * a_cur + num * a_prev
        a_prev = a_cur
        a_cur = tmp
        tmp = den * b_cur + num * b_prev
        b_prev = b_cur
        b_cur = tmp
        if j % 16 == 0:
            scale = fabs(b_cur)
            if scale > 0.0:
                a_prev /= scale
                a_cur /= scale
                b_prev /= scale
                b_cur /= scale
    return a_cur / b_cur
