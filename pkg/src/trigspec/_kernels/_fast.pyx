# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the NumPy kernels in ``_ref``.

Same contracts, same math; per-term libm cos/sin, per-coefficient
sequential summation order.
"""

from libc.math cimport cos, sin

import numpy as np


def synth(double a0, const double[::1] coeff_a, const double[::1] coeff_b, const double[::1] t):
    """Evaluate a0/2 + sum_j (a_j cos(j t) + b_j sin(j t)) at points t."""
    cdef Py_ssize_t P = t.shape[0]
    cdef Py_ssize_t J = coeff_a.shape[0]
    if coeff_b.shape[0] != J:
        raise ValueError("coefficient arrays must have equal length")
    out = np.empty(P, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, j
    cdef double acc, ti, ph
    for i in range(P):
        ti = t[i]
        acc = 0.5 * a0
        for j in range(J):
            ph = (j + 1) * ti
            acc += coeff_a[j] * cos(ph) + coeff_b[j] * sin(ph)
        o[i] = acc
    return out


def dft(const double[::1] values):
    """Discrete Fourier coefficients of samples on the odd uniform grid."""
    cdef Py_ssize_t N = values.shape[0]
    if N < 3 or N % 2 == 0:
        raise ValueError("need an odd number of samples, N = 2n+1 >= 3")
    cdef Py_ssize_t n = (N - 1) // 2
    a = np.empty(n, dtype=np.float64)
    b = np.empty(n, dtype=np.float64)
    cdef double[::1] av = a
    cdef double[::1] bv = b
    cdef double twopi_over_N = 2.0 * np.pi / N
    cdef double scale = 2.0 / N
    cdef Py_ssize_t j, k
    cdef double a0 = 0.0, sa, sb, tj
    for j in range(N):
        a0 += values[j]
    a0 *= scale
    for k in range(1, n + 1):
        sa = 0.0
        sb = 0.0
        for j in range(N):
            tj = k * twopi_over_N * j
            sa += values[j] * cos(tj)
            sb += values[j] * sin(tj)
        av[k - 1] = scale * sa
        bv[k - 1] = scale * sb
    return a0, a, b
