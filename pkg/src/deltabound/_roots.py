"""Bracketed bisection shared by the transcendental solvers."""
from __future__ import annotations

from typing import Callable


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float,
           f_lo: float | None = None, max_iter: int = 400) -> float:
    """Root of ``f`` in ``[lo, hi]`` to absolute width ``tol``.

    ``f(lo)`` and ``f(hi)`` must differ in sign (or one of them vanish).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if f_lo is None:
        f_lo = f(lo)
    if f_lo == 0.0:
        return lo
    f_hi = f(hi)
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
