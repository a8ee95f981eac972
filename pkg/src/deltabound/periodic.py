"""Lowest (negative-energy) band of an infinite lattice of equal delta wells.

Imposing ``phi(x + d) = exp(iKd) phi(x)`` on the superposition
``phi(x) = sum_n (a/2b) c_n exp(-b|x - nd|)`` with ``c_n = exp(iKnd) c_0``
and summing the geometric series at ``x = 0`` gives

    cos(K d) = cosh(b d) - (a / 2b) sinh(b d).

Writing ``u = bd`` and ``g = ad/2``, the right side ``cosh u - g sinh(u)/u``
starts at ``1 - g`` and grows without bound, so each level ``cos(Kd)`` has at
most one crossing. At the zone boundary (``cos = -1``) a root exists iff
``ad > 4``; otherwise the band runs into the continuum at ``E = 0``.
"""
from __future__ import annotations

import math

from ._roots import bisect
from .model import ValidationError

DEFAULT_TOL = 1e-12


def dispersion_residual(b: float, K: float, a: float, d: float) -> float:
    """``cos(Kd) - [cosh(bd) - (a/2b) sinh(bd)]``. Overflows to inf for ``bd > ~710``."""
    if not (b > 0 and d > 0):
        raise ValidationError("b and d must be positive")
    u = b * d
    return math.cos(K * d) - (math.cosh(u) - a / (2.0 * b) * math.sinh(u))


def _scaled(b: float, cos_kd: float, a: float, d: float) -> float:
    # -exp(-bd) * dispersion_residual: same roots, no overflow, increasing past the minimum
    u = b * d
    return (0.5 * (1.0 + math.exp(-2.0 * u)) + a / (4.0 * b) * math.expm1(-2.0 * u)
            - cos_kd * math.exp(-u))


def band_root(K: float, a: float, d: float, tol: float = DEFAULT_TOL) -> float | None:
    """Decay rate of the lowest band at Bloch number ``K``, or ``None`` above ``E = 0``."""
    if not (a > 0 and d > 0 and tol > 0):
        raise ValidationError("need a > 0, d > 0, tol > 0")
    c = math.cos(K * d)
    lo = tol
    f_lo = _scaled(lo, c, a, d)
    if f_lo >= 0:
        return None
    hi = max(a, 1.0 / d)
    while _scaled(hi, c, a, d) <= 0:
        hi *= 2.0
    return bisect(lambda b: _scaled(b, c, a, d), lo, hi, tol, f_lo=f_lo)


def band_edges(a: float, d: float, tol: float = DEFAULT_TOL) -> tuple[float | None, float | None]:
    """``(b_top, b_bottom)``: decay rates at ``K = 0`` and ``K = pi/d``.

    ``b_top`` is the most strongly bound state of the band. ``b_bottom`` is
    ``None`` when the zone-boundary state is not bound (``a d <= 4``).
    """
    return band_root(0.0, a, d, tol), band_root(math.pi / d, a, d, tol)


def band(a: float, d: float, samples: int, tol: float = DEFAULT_TOL) -> list[tuple[float, float | None]]:
    """``(K, b)`` on ``samples`` evenly spaced Bloch numbers in ``[0, pi/d]``."""
    if samples < 1:
        raise ValidationError("samples must be at least 1")
    if samples == 1:
        ks = [0.0]
    else:
        ks = [math.pi / d * i / (samples - 1) for i in range(samples)]
    return [(K, band_root(K, a, d, tol)) for K in ks]
