"""Pure-Python Sturm-sequence kernels; same contract as the compiled module."""
from __future__ import annotations

import numpy as np

_PIVMIN = 1e-300


def _count(diag: list, off2: list, shift: float) -> int:
    neg = 0
    q = diag[0] - shift
    if q < 0:
        neg += 1
    for d, e2 in zip(diag[1:], off2):
        if -_PIVMIN < q < _PIVMIN:
            q = -_PIVMIN
        q = d - shift - e2 / q
        if q < 0:
            neg += 1
    return neg


def sturm_count(diag, off, shift: float) -> int:
    """Number of eigenvalues strictly below ``shift``."""
    return _count(np.asarray(diag, float).tolist(), np.square(off).tolist(), float(shift))


def bisect_eigenvalues(diag, off, count: int, tol: float, lo: float, hi: float) -> np.ndarray:
    """The ``count`` smallest eigenvalues, each bracketed inside ``[lo, hi]``."""
    d = np.asarray(diag, float).tolist()
    e2 = np.square(off).tolist()
    out = np.empty(count)
    for k in range(count):
        left = lo if k == 0 else out[k - 1]
        right = hi
        while right - left > tol:
            mid = 0.5 * (left + right)
            if mid <= left or mid >= right:
                break
            if _count(d, e2, mid) > k:
                right = mid
            else:
                left = mid
        out[k] = 0.5 * (left + right)
    return out
