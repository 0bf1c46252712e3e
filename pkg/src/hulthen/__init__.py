"""Bound states of the Hulthen potential: closed forms, SUSY chain and a numerical oracle."""

from .errors import (
    BranchSelectionError,
    DegenerateDiscriminantError,
    DomainError,
    HulthenError,
    StateNotFoundError,
    UnboundStateError,
)
from .model import C0_IMPROVED, PotentialSpec, QuantumNumbers, potential_effective, potential_hulthen
from .nu_solver import EnergyResult, energy_nu, normalization_constant, wavefunction
from .oracle import GridSpec, SpectrumResult, solve_radial
from .susy_solver import energy_susy, ground_energy, superpotential_coeffs

__version__ = "0.1.0"

__all__ = [
    "BranchSelectionError",
    "C0_IMPROVED",
    "DegenerateDiscriminantError",
    "DomainError",
    "EnergyResult",
    "GridSpec",
    "HulthenError",
    "PotentialSpec",
    "QuantumNumbers",
    "SpectrumResult",
    "StateNotFoundError",
    "UnboundStateError",
    "energy_nu",
    "energy_susy",
    "ground_energy",
    "normalization_constant",
    "potential_effective",
    "potential_hulthen",
    "solve_radial",
    "superpotential_coeffs",
    "wavefunction",
]
