# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Sturm-sequence kernels for symmetric tridiagonal matrices."""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

cdef double _PIVMIN = 1e-300


cdef Py_ssize_t _count(const double[::1] diag, const double[::1] off2,
                       double shift) nogil:
    cdef Py_ssize_t i, n = diag.shape[0], neg = 0
    cdef double q = diag[0] - shift
    if q < 0:
        neg += 1
    for i in range(1, n):
        if fabs(q) < _PIVMIN:
            q = -_PIVMIN
        q = diag[i] - shift - off2[i - 1] / q
        if q < 0:
            neg += 1
    return neg


def sturm_count(diag, off, double shift):
    """Number of eigenvalues strictly below ``shift``."""
    cdef double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef double[::1] e2 = np.ascontiguousarray(np.square(off), dtype=np.float64)
    return _count(d, e2, shift)


def bisect_eigenvalues(diag, off, Py_ssize_t count, double tol, double lo, double hi):
    """The ``count`` smallest eigenvalues, each bracketed inside ``[lo, hi]``."""
    cdef double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef double[::1] e2 = np.ascontiguousarray(np.square(off), dtype=np.float64)
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] res = out
    cdef Py_ssize_t k
    cdef double left, right, mid
    with nogil:
        for k in range(count):
            left = lo if k == 0 else res[k - 1]
            right = hi
            while right - left > tol:
                mid = 0.5 * (left + right)
                if mid <= left or mid >= right:
                    break
                if _count(d, e2, mid) > k:
                    right = mid
                else:
                    left = mid
            res[k] = 0.5 * (left + right)
    return out
