"""Bound states of N delta wells from the self-consistent exponential ansatz.

A bound state with decay rate ``b`` is

    phi(x) = sum_j (a_j / 2b) c_j exp(-b |x - x_j|),     c_i = phi(x_i),

so ``c`` is a null vector of ``M(b) - I`` with
``M_ij = (a_j / 2b) exp(-b |x_i - x_j|)``. Roots of ``det(M(b) - I)`` are the
allowed decay rates.

Root isolation uses an inertia count. With ``r = |a|^(1/2)`` and
``G_ij = exp(-b |x_i - x_j|)`` the condition is equivalent to singularity of
the symmetric matrix ``diag(r) G diag(r) / 2b - diag(sign a)``. ``G / 2b``
samples the resolvent kernel of ``-d^2/dx^2 + b^2`` and strictly decreases
with ``b``, so the number of positive eigenvalues, minus the number of
repulsive wells, counts the bound states whose decay rate exceeds ``b``.
The count brackets every root, including near-degenerate pairs that a plain
sign scan would step over.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._roots import bisect
from .model import BoundState, DeltaPotential, Parity, SolverError, ValidationError

DEFAULT_TOL = 1e-12
# states with b below this fraction of the strongest |a| are not resolved
SHALLOW_LIMIT = 1e-6


class DegenerateRootWarning(UserWarning):
    """Two decay rates closer than the requested tolerance."""


@dataclass(frozen=True)
class CharacteristicSystem:
    b: float
    matrix: np.ndarray
    residual: float


def _arrays(pot: DeltaPotential) -> tuple[np.ndarray, np.ndarray]:
    return np.asarray(pot.strengths, dtype=float), np.asarray(pot.positions, dtype=float)


def _char_matrix(a: np.ndarray, x: np.ndarray, b: float) -> np.ndarray:
    dist = np.abs(x[:, None] - x[None, :])
    return np.exp(-b * dist) * (a / (2.0 * b))[None, :]


def char_system(pot: DeltaPotential, b: float) -> CharacteristicSystem:
    if not b > 0:
        raise ValidationError("b must be positive")
    a, x = _arrays(pot)
    m = _char_matrix(a, x, b)
    res = float(np.linalg.det(m - np.eye(len(a))))
    return CharacteristicSystem(b=b, matrix=m, residual=res)


def char_residual(pot: DeltaPotential, b: float) -> float:
    """``det(M(b) - I)``; vanishes at bound-state decay rates."""
    return char_system(pot, b).residual


def _symmetric_form(a: np.ndarray, x: np.ndarray, b) -> np.ndarray:
    """``|D|^1/2 G |D|^1/2 - 2b sign(D)``; singular exactly at bound states.

    This is ``2b`` times the form in the module notes: same inertia, but
    entries stay O(|a|) as ``b -> 0``. ``b`` may be an array, giving a stack.
    """
    r = np.sqrt(np.abs(a))
    dist = np.abs(x[:, None] - x[None, :])
    bv = np.asarray(b, dtype=float)[..., None, None]
    return np.exp(-bv * dist) * np.outer(r, r) - 2.0 * bv * np.diag(np.sign(a))


def _count_above(a: np.ndarray, x: np.ndarray, b):
    """Number of bound states with decay rate strictly above ``b`` (vectorized in ``b``)."""
    eig = np.linalg.eigvalsh(_symmetric_form(a, x, b))
    counts = np.count_nonzero(eig > 0, axis=-1) - int(np.count_nonzero(a < 0))
    return int(counts) if np.ndim(counts) == 0 else counts.tolist()


def _det_sign(a: np.ndarray, x: np.ndarray, b: float) -> float:
    sign, _ = np.linalg.slogdet(_char_matrix(a, x, b) - np.eye(len(a)))
    return float(sign)


def _state_vector(a: np.ndarray, x: np.ndarray, b: float) -> np.ndarray:
    """Well values ``c`` at a root, from the near-zero eigenvector of the symmetric form.

    Eigenvectors of a symmetric matrix stay accurate when a second root is
    close by, where elimination on ``M - I`` would mix the two directions.
    """
    w, v = np.linalg.eigh(_symmetric_form(a, x, b))
    u = v[:, np.argmin(np.abs(w))]
    # diag(a) c = |a|^1/2 u, and c = G diag(a) c / 2b
    c = np.exp(-b * np.abs(x[:, None] - x[None, :])) @ (np.sqrt(np.abs(a)) * u)
    return c / np.linalg.norm(c)


def reconstruct(state: BoundState, pot: DeltaPotential, x):
    """Evaluate ``phi`` at ``x`` (scalar or array)."""
    a, xs = _arrays(pot)
    c = np.asarray(state.coeffs, dtype=float)
    weights = a * c / (2.0 * state.b)
    xv = np.asarray(x, dtype=float)
    vals = np.exp(-state.b * np.abs(xv[..., None] - xs)) @ weights
    return float(vals) if np.ndim(vals) == 0 else vals


def norm_squared(state: BoundState, pot: DeltaPotential) -> float:
    """``int |phi|^2 dx`` from the closed-form overlap of two exponentials."""
    a, xs = _arrays(pot)
    b = state.b
    u = a * np.asarray(state.coeffs) / (2.0 * b)
    d = np.abs(xs[:, None] - xs[None, :])
    overlap = np.exp(-b * d) * (d + 1.0 / b)
    return float(u @ overlap @ u)


def normalize(state: BoundState, pot: DeltaPotential) -> BoundState:
    """Scale coefficients to unit norm with the first significant one positive."""
    n2 = norm_squared(state, pot)
    if not n2 > 0 or not math.isfinite(n2):
        raise ValidationError("state has zero norm")
    c = np.asarray(state.coeffs, dtype=float)
    if abs(n2 - 1.0) > 4 * np.finfo(float).eps:
        c = c / math.sqrt(n2)
    big = np.max(np.abs(c))
    first = next(v for v in c if abs(v) > 1e-9 * big)
    if first < 0:
        c = -c
    return BoundState(state.b, tuple(c), state.parity)


def parity_classify(state: BoundState, pot: DeltaPotential, tol: float = 1e-8) -> Parity:
    """Parity of ``state`` under reflection about the well centroid."""
    if not pot.is_mirror_symmetric():
        return Parity.NONE
    c = np.asarray(state.coeffs, dtype=float)
    scale = np.max(np.abs(c))
    rev = c[::-1]
    if np.max(np.abs(rev - c)) <= tol * scale:
        return Parity.EVEN
    if np.max(np.abs(rev + c)) <= tol * scale:
        return Parity.ODD
    return Parity.NONE


def default_scan(pot: DeltaPotential) -> tuple[float, float]:
    """Default ``(b_max, step)`` for :func:`scan_bound_states`."""
    b_max = sum(abs(a) for a in pot.strengths) / 2.0 + 1.0
    return b_max, b_max / 1000.0


def scan_bound_states(pot: DeltaPotential, b_max: float | None = None,
                      step: float | None = None,
                      tol: float = DEFAULT_TOL) -> list[BoundState]:
    """All bound states with decay rate in ``(tol, b_max]``, deepest first.

    States shallower than ``SHALLOW_LIMIT * max|a_j|`` sit within rounding
    of the continuum threshold and are not reported.

    The grid ``tol, tol + step, ...`` is bracketed with the inertia count;
    brackets holding several roots are split until each holds one, then
    refined by bisection on the sign of ``det(M - I)``. Returned states are
    normalized and carry their parity.
    """
    if not tol > 0:
        raise ValidationError("tol must be positive")
    d_bmax, d_step = default_scan(pot)
    b_max = d_bmax if b_max is None else float(b_max)
    step = d_step if step is None else float(step)
    if not (step > 0 and b_max > 0):
        raise ValidationError("b_max and step must be positive")
    if step >= b_max:
        raise ValidationError("step must be smaller than b_max")
    deepest = sum(max(a, 0.0) for a in pot.strengths) / 2.0
    if b_max < deepest + step:
        raise ValidationError(f"b_max={b_max} cannot cover the deepest state (b <= {deepest})")

    a_all, x_all = _arrays(pot)
    active = a_all != 0.0
    a, x = a_all[active], x_all[active]
    if a.size == 0 or not np.any(a > 0):
        return []

    # below this the sign of the count is rounding noise (threshold tangencies)
    b_lo = max(tol, SHALLOW_LIMIT * float(np.max(np.abs(a))))
    n_steps = int(math.ceil((b_max - b_lo) / step))
    grid = [min(b_lo + i * step, b_max) for i in range(n_steps + 1)]
    counts = _count_above(a, x, np.array(grid))
    if counts[-1] != 0:
        raise SolverError("states found above b_max; increase b_max")

    roots: list[float] = []
    for lo, hi, n_lo, n_hi in zip(grid[:-1], grid[1:], counts[:-1], counts[1:]):
        if n_lo > n_hi:
            _isolate(a, x, lo, hi, n_lo, n_hi, tol, roots)
    roots.sort()

    states = []
    for i, b in enumerate(roots):
        c_active = _state_vector(a, x, b)
        if roots.count(b) > 1:
            # unresolved pair: take orthogonal near-null directions
            system = _char_matrix(a, x, b) - np.eye(a.size)
            c_active = np.linalg.svd(system)[2][-1 - (i - roots.index(b))]
        coeffs = np.empty(a_all.size)
        coeffs[active] = c_active
        if not active.all():
            weights = a * c_active / (2.0 * b)
            gap = x_all[~active]
            coeffs[~active] = np.exp(-b * np.abs(gap[:, None] - x)) @ weights
        st = normalize(BoundState(b, tuple(coeffs)), pot)
        parity = parity_classify(st, pot)
        if parity is not Parity.NONE:
            # project onto the exact symmetry sector to drop round-off asymmetry
            c = np.asarray(st.coeffs)
            sign = 1.0 if parity is Parity.EVEN else -1.0
            st = normalize(BoundState(b, tuple(0.5 * (c + sign * c[::-1]))), pot)
        states.append(BoundState(st.b, st.coeffs, parity))
    states.sort(key=lambda s: s.energy)
    return states


def _isolate(a, x, lo, hi, n_lo, n_hi, tol, roots) -> None:
    if n_lo - n_hi == 1:
        roots.append(_refine(a, x, lo, hi, n_hi, tol))
        return
    if hi - lo <= tol:
        warnings.warn(
            f"{n_lo - n_hi} decay rates within {hi - lo:.3g} of b={0.5 * (lo + hi):.15g}",
            DegenerateRootWarning, stacklevel=3)
        roots.extend([0.5 * (lo + hi)] * (n_lo - n_hi))
        return
    mid = 0.5 * (lo + hi)
    n_mid = _count_above(a, x, mid)
    if n_lo > n_mid:
        _isolate(a, x, lo, mid, n_lo, n_mid, tol, roots)
    if n_mid > n_hi:
        _isolate(a, x, mid, hi, n_mid, n_hi, tol, roots)


def _refine(a, x, lo, hi, n_hi, tol) -> float:
    # also resolve shallow states relative to b, where M - I varies like 1/b^2
    tol = min(tol, 1e-12 * lo) if lo > 0 else tol
    s_lo, s_hi = _det_sign(a, x, lo), _det_sign(a, x, hi)
    if s_lo * s_hi < 0:
        return bisect(lambda b: _det_sign(a, x, b), lo, hi, tol, f_lo=s_lo)
    # det sign unreliable at the bracket ends; fall back to the count itself
    return bisect(lambda b: _count_above(a, x, b) - n_hi - 0.5, lo, hi, tol)
