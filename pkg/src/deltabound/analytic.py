"""Closed-form single well and the even/odd conditions for a symmetric pair.

For two wells of strength ``a`` at ``x = -L`` and ``x = +L`` the bound
states satisfy ``exp(-2bL) = (2b/a - 1) * phi(+L)/phi(-L)`` with the ratio
``+1`` for even states and ``-1`` for odd ones.
"""
from __future__ import annotations

import math

from ._roots import bisect
from .model import BoundState, Parity, ValidationError

DEFAULT_TOL = 1e-12


def single_bound_state(a: float) -> BoundState | None:
    """The unique state of one attractive well at the origin, else ``None``."""
    if not a > 0:
        return None
    return BoundState(b=a / 2.0, coeffs=(1.0,), parity=Parity.EVEN)


def _check(b: float, a: float, L: float) -> None:
    if a == 0:
        raise ValidationError("strength a must be nonzero")
    if L <= 0:
        raise ValidationError("half-separation L must be positive")
    if b < 0:
        raise ValidationError("decay rate b must be non-negative")


def even_residual(b: float, a: float, L: float) -> float:
    _check(b, a, L)
    return math.exp(-2.0 * b * L) - (2.0 * b / a - 1.0)


def odd_residual(b: float, a: float, L: float) -> float:
    _check(b, a, L)
    return math.exp(-2.0 * b * L) - (1.0 - 2.0 * b / a)


def odd_state_exists(a: float, L: float) -> bool:
    return a > 0 and a * L > 1


def solve_double(a: float, L: float, tol: float = DEFAULT_TOL) -> list[BoundState]:
    """Bound states of two equal wells at ``+-L``, sorted by energy.

    The even root lies in ``(a/2, a)``; the odd one, present only when
    ``a*L > 1``, lies in ``(0, a/2)``. Both are refined by bisection.
    """
    if not tol > 0:
        raise ValidationError("tol must be positive")
    if L <= 0:
        raise ValidationError("half-separation L must be positive")
    if not a > 0:
        return []

    states = []
    half = a / 2.0
    # even_residual(a/2) = exp(-aL) >= 0 and even_residual(a) < 0
    b_even = bisect(lambda b: even_residual(b, a, L), half, a, tol)
    states.append(BoundState(b_even, (1.0, 1.0), Parity.EVEN))

    if odd_state_exists(a, L):
        lo = min(tol, half / 2)
        f_lo = odd_residual(lo, a, L)
        # below tol the root is indistinguishable from the b = 0 tangency
        if f_lo < 0:
            b_odd = bisect(lambda b: odd_residual(b, a, L), lo, half, tol, f_lo=f_lo)
            states.append(BoundState(b_odd, (-1.0, 1.0), Parity.ODD))
    states.sort(key=lambda s: s.energy)
    return states
