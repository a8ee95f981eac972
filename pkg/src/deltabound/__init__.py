"""Bound states of one-dimensional Dirac-delta potentials.

Each bound state is a superposition of exponentials ``exp(-b|x - x_j|)``
centred on the wells, equivalently a sum of Lorentzians in momentum space.
"""
__version__ = "0.1.0"

from .analytic import odd_state_exists, single_bound_state, solve_double
from .model import (BoundState, DeltaPotential, Parity, PhysicalSpec, SolverError,
                    ValidationError, energy_physical, parse_input, to_natural)
from .ndelta import (char_residual, normalize, parity_classify, reconstruct,
                     scan_bound_states)

__all__ = [
    "BoundState", "DeltaPotential", "Parity", "PhysicalSpec", "SolverError",
    "ValidationError", "char_residual", "energy_physical", "normalize",
    "odd_state_exists", "parity_classify", "parse_input", "reconstruct",
    "scan_bound_states", "single_bound_state", "solve_double", "to_natural",
]
