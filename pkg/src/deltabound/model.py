"""Domain types and unit reduction for one-dimensional delta-well problems.

All solvers work in natural units (hbar = m = 1), where a well of physical
strength ``alpha`` becomes ``a = 2 m alpha / hbar**2`` and a bound state with
decay rate ``b`` has energy ``-b**2 / 2``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

MERGE_TOL = 1e-12


class ValidationError(ValueError):
    """Raised for malformed or inconsistent potential inputs."""


class SolverError(RuntimeError):
    """Raised when a solver cannot produce a trustworthy result."""


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


def _finite(value: Any, name: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{name} must be a number, got {value!r}") from None
    if not math.isfinite(out):
        raise ValidationError(f"{name} must be finite, got {out}")
    return out


@dataclass(frozen=True)
class PhysicalSpec:
    """Physical inputs: particle mass, hbar and ``(alpha, x)`` well pairs."""

    mass: float
    hbar: float
    wells: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        mass = _finite(self.mass, "mass")
        hbar = _finite(self.hbar, "hbar")
        if mass <= 0 or hbar <= 0:
            raise ValidationError("mass and hbar must be positive")
        wells = tuple((_finite(al, "alpha"), _finite(x, "x")) for al, x in self.wells)
        if not wells:
            raise ValidationError("at least one well is required")
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "hbar", hbar)
        object.__setattr__(self, "wells", wells)


@dataclass(frozen=True)
class DeltaPotential:
    """Natural-units wells ``(a_j, x_j)``, sorted by position.

    Wells closer than ``MERGE_TOL`` are merged by adding their strengths.
    """

    wells: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        raw = [(_finite(a, "a"), _finite(x, "x")) for a, x in self.wells]
        if not raw:
            raise ValidationError("at least one well is required")
        # sort by (x, a) so the merged result does not depend on input order
        raw.sort(key=lambda w: (w[1], w[0]))
        merged: list[list[float]] = []
        for a, x in raw:
            if merged and abs(x - merged[-1][1]) <= MERGE_TOL:
                merged[-1][0] += a
            else:
                merged.append([a, x])
        object.__setattr__(self, "wells", tuple((a, x) for a, x in merged))

    @classmethod
    def from_pairs(cls, strengths: Iterable[float], positions: Iterable[float]) -> "DeltaPotential":
        return cls(tuple(zip(strengths, positions)))

    @property
    def strengths(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.wells)

    @property
    def positions(self) -> tuple[float, ...]:
        return tuple(x for _, x in self.wells)

    def __len__(self) -> int:
        return len(self.wells)

    def shifted(self, t: float) -> "DeltaPotential":
        return DeltaPotential(tuple((a, x + t) for a, x in self.wells))

    def is_mirror_symmetric(self, tol: float = 1e-12) -> bool:
        """True when positions and strengths are symmetric about the centroid."""
        xs, strengths = self.positions, self.strengths
        center = sum(xs) / len(xs)
        n = len(xs)
        scale = max(1.0, max(abs(x) for x in xs))
        for i in range(n):
            j = n - 1 - i
            if abs((xs[i] - center) + (xs[j] - center)) > tol * scale:
                return False
            if abs(strengths[i] - strengths[j]) > tol * max(1.0, abs(strengths[i])):
                return False
        return True


@dataclass(frozen=True)
class BoundState:
    """A bound state ``phi(x) = sum_j (a_j / 2b) c_j exp(-b |x - x_j|)``.

    ``coeffs`` are the wavefunction values at the wells.
    """

    b: float
    coeffs: tuple[float, ...]
    parity: Parity = Parity.NONE
    energy: float = field(init=False)

    def __post_init__(self) -> None:
        b = float(self.b)
        if not (b > 0 and math.isfinite(b)):
            raise ValidationError(f"decay rate must be positive and finite, got {b}")
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs or not any(coeffs):
            raise ValidationError("coefficients must not all vanish")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "parity", Parity(self.parity))
        object.__setattr__(self, "energy", -b * b / 2)


def to_natural(spec: PhysicalSpec) -> DeltaPotential:
    """Map physical wells to natural-units strengths ``a = 2 m alpha / hbar^2``."""
    factor = 2.0 * spec.mass / spec.hbar**2
    return DeltaPotential(tuple((factor * alpha, x) for alpha, x in spec.wells))


def energy_physical(state: BoundState, spec: PhysicalSpec) -> float:
    """Energy of ``state`` in the units of ``spec``: ``-hbar^2 b^2 / (2 m)``."""
    return -(spec.hbar**2) * state.b**2 / (2.0 * spec.mass)


def parse_input(data: Mapping[str, Any]) -> tuple[DeltaPotential, PhysicalSpec | None]:
    """Build a potential from the JSON input form.

    Accepts either ``{"mass", "hbar", "wells": [{"alpha", "x"}]}`` or the
    natural form ``{"wells": [{"a", "x"}]}``. Returns the natural potential
    and the physical spec when one was given.
    """
    if not isinstance(data, Mapping):
        raise ValidationError("input must be a JSON object")
    wells = data.get("wells")
    if not isinstance(wells, Sequence) or isinstance(wells, (str, bytes)) or not wells:
        raise ValidationError("'wells' must be a non-empty list")
    for w in wells:
        if not isinstance(w, Mapping) or "x" not in w:
            raise ValidationError(f"malformed well entry: {w!r}")

    physical = "mass" in data or "hbar" in data or any("alpha" in w for w in wells)
    if physical:
        if "mass" not in data or "hbar" not in data:
            raise ValidationError("physical input needs both 'mass' and 'hbar'")
        try:
            pairs = tuple((w["alpha"], w["x"]) for w in wells)
        except KeyError:
            raise ValidationError("every physical well needs 'alpha' and 'x'") from None
        spec = PhysicalSpec(data["mass"], data["hbar"], pairs)
        return to_natural(spec), spec
    try:
        pairs = tuple((w["a"], w["x"]) for w in wells)
    except KeyError:
        raise ValidationError("every natural well needs 'a' and 'x'") from None
    return DeltaPotential(pairs), None
