"""Finite-difference cross-check, independent of the Fourier machinery.

The operator ``-(1/2) d^2/dx^2 - sum_j (a_j/2) delta(x - x_j)`` is put on a
uniform grid with Dirichlet ends. Each delta becomes an on-site term
``-a_j / (2h)`` at the node nearest ``x_j``. The lowest eigenvalues of the
resulting symmetric tridiagonal matrix come from Sturm-sequence bisection.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .kernels import bisect_eigenvalues, sturm_count
from .model import DeltaPotential, ValidationError
from .ndelta import scan_bound_states

DEFAULT_H = 5e-3
DEFAULT_EIG_TOL = 1e-11


@dataclass(frozen=True)
class GridHamiltonian:
    h: float
    n: int
    x_lo: float
    x_hi: float
    diagonal: np.ndarray = field(repr=False)
    off_diagonal: float

    @property
    def off(self) -> np.ndarray:
        return np.full(self.n - 1, self.off_diagonal)

    def nodes(self) -> np.ndarray:
        return self.x_lo + self.h * np.arange(self.n)

    def count_below(self, e: float) -> int:
        return sturm_count(self.diagonal, self.off, e)


def build_grid(pot: DeltaPotential, padding: float, n: int) -> GridHamiltonian:
    if n < 3:
        raise ValidationError("grid needs at least 3 points")
    if not padding > 0:
        raise ValidationError("padding must be positive")
    xs = pot.positions
    x_lo, x_hi = min(xs) - padding, max(xs) + padding
    h = (x_hi - x_lo) / (n - 1)
    diag = np.full(n, 1.0 / h**2)
    taken: dict[int, float] = {}
    for a, x in pot.wells:
        node = int(round((x - x_lo) / h))
        if node in taken:
            raise ValidationError(
                f"wells at x={taken[node]} and x={x} share grid node {node}; refine the grid")
        taken[node] = x
        diag[node] -= a / (2.0 * h)
    return GridHamiltonian(h=h, n=n, x_lo=x_lo, x_hi=x_hi, diagonal=diag,
                           off_diagonal=-1.0 / (2.0 * h**2))


def lowest_eigenvalues(ham: GridHamiltonian, count: int,
                       tol: float = DEFAULT_EIG_TOL) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending, each to absolute ``tol``."""
    if count < 1:
        raise ValidationError("count must be at least 1")
    if count > ham.n:
        raise ValidationError(f"count={count} exceeds grid size {ham.n}")
    if not tol > 0:
        raise ValidationError("tol must be positive")
    # Gershgorin bounds
    radius = 2.0 * abs(ham.off_diagonal)
    lo = float(ham.diagonal.min()) - radius
    hi = float(ham.diagonal.max()) + radius
    return bisect_eigenvalues(ham.diagonal, ham.off, count, tol, lo, hi)


def default_grid(pot: DeltaPotential, h: float | None = None,
                 padding: float | None = None) -> tuple[float, int]:
    """``(padding, n)`` with padding ``25/b`` and spacing at most ``min(5e-3, gap/10)``."""
    if padding is None:
        b_expected = sum(abs(a) for a in pot.strengths) / 2.0
        padding = 25.0 / b_expected if b_expected > 0 else 25.0
    if h is None:
        xs = pot.positions
        gaps = [q - p for p, q in zip(xs, xs[1:])]
        h = min([DEFAULT_H] + [g / 10.0 for g in gaps])
    if not h > 0:
        raise ValidationError("grid spacing must be positive")
    width = max(pot.positions) - min(pot.positions) + 2.0 * padding
    n = int(math.ceil(width / h - 1e-9)) + 1
    return padding, n


@dataclass(frozen=True)
class OracleRow:
    index: int
    b: float
    energy_fourier: float
    energy_oracle: float
    abs_error: float
    rel_error: float


@dataclass(frozen=True)
class OracleReport:
    rows: list[OracleRow]
    oracle_negative: list[float]
    h: float
    n: int
    padding: float

    @property
    def max_rel_error(self) -> float:
        return max((r.rel_error for r in self.rows), default=0.0)

    @property
    def counts_agree(self) -> bool:
        return len(self.rows) == len(self.oracle_negative)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["max_rel_error"] = self.max_rel_error
        out["counts_agree"] = self.counts_agree
        return out


def compare(pot: DeltaPotential, count: int | None = None, h: float | None = None,
            padding: float | None = None, tol: float = 1e-12,
            eig_tol: float = DEFAULT_EIG_TOL) -> OracleReport:
    """Pair each Fourier-method energy with the nearest negative grid eigenvalue."""
    states = scan_bound_states(pot, tol=tol)
    padding, n = default_grid(pot, h, padding)
    ham = build_grid(pot, padding, n)
    if count is None:
        count = len(states) + 1
    eigs = lowest_eigenvalues(ham, min(count, n), eig_tol)
    negative = [float(e) for e in eigs if e < 0]

    rows = []
    for i, st in enumerate(states):
        if not negative:
            break
        e_grid = min(negative, key=lambda e: abs(e - st.energy))
        err = abs(e_grid - st.energy)
        rows.append(OracleRow(i, st.b, st.energy, e_grid, err, err / abs(st.energy)))
    return OracleReport(rows=rows, oracle_negative=negative, h=ham.h, n=ham.n, padding=padding)
