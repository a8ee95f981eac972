"""Momentum-space wavefunction as a sum of shifted Lorentzians.

With the convention ``Phi(k) = (2 pi)^{-1/2} int exp(ikx) phi(x) dx`` a state
``phi(x) = sum_j (a_j/2b) c_j exp(-b|x - x_j|)`` transforms to

    Phi(k) = sum_j w_j exp(i k x_j) / (k^2 + b^2),   w_j = a_j c_j / sqrt(2 pi).

The quadrature routines here evaluate the same quantities numerically from
the position-space reconstruction and serve as the cross-check.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .model import BoundState, DeltaPotential, Parity
from .ndelta import norm_squared, reconstruct

SQRT_2PI = math.sqrt(2.0 * math.pi)
TRUNCATION = 40.0  # tail cut at 40/b beyond the outer wells: error ~ exp(-40)
PARITY_SAMPLES = (0.1, 0.25, 0.5, 1.0, 1.7, 3.0, 5.0, 10.0)


class QuadratureError(RuntimeError):
    """Adaptive quadrature missed its tolerance."""

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error estimate {achieved:.3g})")
        self.achieved = achieved


@dataclass(frozen=True)
class MomentumProfile:
    b: float
    terms: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.b > 0:
            raise ValueError("b must be positive")
        if not self.terms:
            raise ValueError("profile needs at least one term")

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for w, _ in self.terms])

    @property
    def positions(self) -> np.ndarray:
        return np.array([x for _, x in self.terms])

    def __call__(self, k, origin: float = 0.0):
        """``Phi(k)``; ``origin`` measures positions from another point."""
        kv = np.asarray(k, dtype=float)
        phase = np.exp(1j * kv[..., None] * (self.positions - origin))
        vals = (phase @ self.weights) / (kv**2 + self.b**2)
        return complex(vals) if np.ndim(vals) == 0 else vals

    @property
    def envelope(self) -> float:
        """Bound on ``|Phi(k)| (k^2 + b^2)``."""
        return float(np.sum(np.abs(self.weights)))


def profile(state: BoundState, pot: DeltaPotential) -> MomentumProfile:
    terms = tuple((a * c / SQRT_2PI, x)
                  for (a, x), c in zip(pot.wells, state.coeffs))
    return MomentumProfile(state.b, terms)


def phi_k(state: BoundState, pot: DeltaPotential, k):
    return profile(state, pot)(k)


def _quad(func, lo, hi, eps, **kw) -> tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(func, lo, hi, epsabs=eps, epsrel=0.0, limit=400, **kw)
    return val, err


def numerical_ft(state: BoundState, pot: DeltaPotential, k: float,
                 quad_tol: float = 1e-10) -> complex:
    """``Phi(k)`` by adaptive quadrature of the reconstructed ``phi``.

    The integral is split at every well, where ``phi`` has a kink, and cut
    at ``40/b`` beyond the outermost wells.
    """
    if not quad_tol > 0:
        raise ValueError("quad_tol must be positive")
    xs = list(pot.positions)
    cuts = [xs[0] - TRUNCATION / state.b] + xs + [xs[-1] + TRUNCATION / state.b]
    pieces = list(zip(cuts[:-1], cuts[1:]))
    eps = quad_tol / (2 * len(pieces))

    def phi(x):
        return reconstruct(state, pot, x)

    re = im = err_total = 0.0
    for lo, hi in pieces:
        if hi <= lo:
            continue
        if k == 0.0:
            v, e = _quad(phi, lo, hi, eps)
            re += v
            err_total += e
            continue
        v, e = _quad(phi, lo, hi, eps, weight="cos", wvar=k)
        re += v
        err_total += e
        v, e = _quad(phi, lo, hi, eps, weight="sin", wvar=k)
        im += v
        err_total += e
    err_total /= SQRT_2PI
    if err_total > quad_tol:
        raise QuadratureError(f"Fourier integral at k={k} did not converge", err_total)
    return complex(re / SQRT_2PI, im / SQRT_2PI)


def parseval_check(state: BoundState, pot: DeltaPotential,
                   quad_tol: float = 1e-10) -> tuple[float, float]:
    """``(int |phi|^2 dx, int |Phi|^2 dk)``; the two agree for any state.

    The position side uses the closed-form overlaps. The momentum side
    integrates the Lorentzian superposition, one Fourier-cosine quadrature
    per distinct well separation.
    """
    prof = profile(state, pot)
    b = prof.b
    w, xs = prof.weights, prof.positions
    pairs: dict[float, float] = {}
    for i in range(len(w)):
        for j in range(len(w)):
            d = round(abs(xs[i] - xs[j]), 15)
            pairs[d] = pairs.get(d, 0.0) + w[i] * w[j]

    # k = b s makes every integral O(1): int cos(k d)/(k^2+b^2)^2 dk = b^-3 int cos(s bd)/(s^2+1)^2 ds
    def lorentz2(s):
        return 1.0 / (s * s + 1.0) ** 2

    eps = quad_tol / max(1, len(pairs))
    total = err_total = scale = 0.0
    for d, coeff in pairs.items():
        if coeff == 0.0:
            continue
        if d == 0.0:
            v, e = _quad(lorentz2, 0.0, np.inf, eps)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", integrate.IntegrationWarning)
                v, e = integrate.quad(lorentz2, 0.0, np.inf, weight="cos", wvar=b * d,
                                      epsabs=eps, limlst=100)
        term = 2.0 * coeff / b**3
        total += term * v
        err_total += abs(term) * e
        scale += abs(term) * math.pi / 4
    # relative to the size of the individual contributions
    if err_total > quad_tol * max(scale, abs(total)):
        raise QuadratureError("momentum-space norm did not converge", err_total)
    return norm_squared(state, pot), total


def parity_of_profile(prof: MomentumProfile, tol: float = 1e-8) -> Parity:
    """Parity of ``Phi`` under ``k -> -k``, measured about the centroid of the wells."""
    center = float(np.mean(prof.positions))
    ks = prof.b * np.array(PARITY_SAMPLES)
    plus = prof(ks, origin=center)
    minus = prof(-ks, origin=center)
    scale = max(np.max(np.abs(plus)), np.max(np.abs(minus)))
    if scale == 0.0:
        return Parity.NONE
    if np.max(np.abs(minus - plus)) <= tol * scale:
        return Parity.EVEN
    if np.max(np.abs(minus + plus)) <= tol * scale:
        return Parity.ODD
    return Parity.NONE
