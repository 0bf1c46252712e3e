"""
Supersymmetric (shape-invariance) route to the Hulthen spectrum.

The superpotential ansatz is

    W(r) = -(hbar / sqrt(2 mu)) (A + B y(r)),   y = exp(-delta r) / (1 - exp(-delta r))

and the partner potentials are V_{+-} = W^2 +- (hbar / sqrt(2 mu)) W'.
Matching W^2 - (hbar/sqrt(2 mu)) W' = V_eff - E0 term by term gives

    B^2 - delta B = delta^2 l(l+1)       ->  B = delta (l + 1)
    2AB - delta B = delta^2 (l(l+1) - alpha^2)
    A = B/2 - delta^2 alpha^2 / (2B).

Shape invariance maps B -> B + delta; the remainders R(B_i) are
r-independent and telescope to the excited energies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import specfun
from .errors import DomainError
from .model import PotentialSpec, QuantumNumbers, potential_effective
from .nu_solver import EnergyResult


@dataclass(frozen=True)
class SuperpotentialCoeffs:
    A: float
    B: float
    l: int
    delta: float

    @property
    def normalizable(self) -> bool:
        return self.B > 0 and self.A < 0


def _a_of_b(B: float, delta: float, alpha_sq: float) -> float:
    return B / 2.0 - delta**2 * alpha_sq / (2.0 * B)


def superpotential_coeffs(spec: PotentialSpec, l: int) -> SuperpotentialCoeffs:
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l!r}")
    B = spec.delta * (l + 1)
    return SuperpotentialCoeffs(A=_a_of_b(B, spec.delta, spec.alpha_sq), B=B, l=l, delta=spec.delta)


def _y(delta: float, r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be > 0")
    return 1.0 / np.expm1(delta * r)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def superpotential(coeffs: SuperpotentialCoeffs, r, spec: PotentialSpec | None = None):
    """W(r); ``spec`` supplies hbar and mu (atomic units if omitted)."""
    pref = _prefactor(spec)
    return _out(-pref * (coeffs.A + coeffs.B * _y(coeffs.delta, r)))


def superpotential_derivative(coeffs: SuperpotentialCoeffs, r, spec: PotentialSpec | None = None):
    # y' = -delta y (1 + y)
    y = _y(coeffs.delta, r)
    return _out(_prefactor(spec) * coeffs.B * coeffs.delta * y * (1.0 + y))


def _prefactor(spec):
    if spec is None:
        return 1.0 / math.sqrt(2.0)
    return spec.hbar / math.sqrt(2.0 * spec.mu)


def riccati_residual(
    coeffs: SuperpotentialCoeffs,
    spec: PotentialSpec,
    q: QuantumNumbers,
    E0: float,
    r,
):
    """W^2 - (hbar/sqrt(2 mu)) W' - (V_eff_approx(r) - E0), in energy units."""
    w = superpotential(coeffs, r, spec)
    dw = superpotential_derivative(coeffs, r, spec)
    v = potential_effective(spec, q, r, mode="approximated")
    return _out(w * w - _prefactor(spec) * dw - (v - E0))


def _centrifugal_shift(spec: PotentialSpec, l: int) -> float:
    return spec.hbar**2 * spec.delta**2 * (l * (l + 1)) * spec.c0 / (2.0 * spec.mu)


def _closed_form(spec: PotentialSpec, l: int, n_r: int) -> float:
    N = n_r + l + 1
    return _centrifugal_shift(spec, l) - spec.kinetic_scale * (
        N * spec.delta / 2.0 - spec.mu * spec.Z / (spec.hbar**2 * N)
    ) ** 2


def ground_energy(spec: PotentialSpec, l: int) -> EnergyResult:
    coeffs = superpotential_coeffs(spec, l)
    # A^2 = eps^2 delta^2 + delta^2 C0 l(l+1)
    energy = _centrifugal_shift(spec, l) - spec.kinetic_scale * coeffs.A**2
    return EnergyResult(
        energy=energy,
        method="SUSY",
        intermediates={"alpha_sq": spec.alpha_sq, "A": coeffs.A, "B": coeffs.B},
    )


@lru_cache(maxsize=256)
def _ground_norm(coeffs: SuperpotentialCoeffs) -> float:
    # integral over r of exp(2Ar)(1 - e^{-delta r})^{2B/delta}, written in s = e^{-delta r}
    p = -2.0 * coeffs.A / coeffs.delta - 1.0
    q = 2.0 * coeffs.B / coeffs.delta
    res = specfun.quadrature(lambda s: s**p * (1.0 - s) ** q, 0.0, 1.0, nodes=32)
    return 1.0 / math.sqrt(res.value / coeffs.delta)


def ground_wavefunction(coeffs: SuperpotentialCoeffs, r):
    """Normalized chi0(r) = N0 exp(A r) (1 - exp(-delta r))^(B/delta)."""
    if coeffs.A >= 0:
        raise DomainError(f"A = {coeffs.A!r} >= 0: ground state is not normalizable")
    if coeffs.B <= 0:
        raise DomainError(f"B = {coeffs.B!r} <= 0: ground state is singular at r = 0")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be > 0")
    norm = _ground_norm(coeffs)
    log_chi = coeffs.A * r + (coeffs.B / coeffs.delta) * np.log(-np.expm1(-coeffs.delta * r))
    return _out(norm * np.exp(log_chi))


@dataclass(frozen=True)
class PartnerPotentialPair:
    v_plus: Callable
    v_minus: Callable
    coeffs: SuperpotentialCoeffs


def partner_potentials(coeffs: SuperpotentialCoeffs, spec: PotentialSpec) -> PartnerPotentialPair:
    A, B, d = coeffs.A, coeffs.B, coeffs.delta
    scale = spec.kinetic_scale

    def v_plus(r):
        y = _y(d, r)
        return _out(scale * (A * A + (2 * A * B + d * B) * y + (B * B + d * B) * y * y))

    def v_minus(r):
        y = _y(d, r)
        return _out(scale * (A * A + (2 * A * B - d * B) * y + (B * B - d * B) * y * y))

    return PartnerPotentialPair(v_plus=v_plus, v_minus=v_minus, coeffs=coeffs)


def coeffs_at(spec: PotentialSpec, l: int, i: int) -> SuperpotentialCoeffs:
    """Coefficients after i shape-invariance steps, B_i = B + i delta."""
    B = spec.delta * (l + 1 + i)
    return SuperpotentialCoeffs(A=_a_of_b(B, spec.delta, spec.alpha_sq), B=B, l=l + i, delta=spec.delta)


def _remainder_terms(spec: PotentialSpec, l: int, i: int) -> tuple[float, float]:
    if i < 1:
        raise DomainError(f"remainder index must be >= 1, got {i!r}")
    b_prev = spec.delta * (l + i)
    b_next = spec.delta * (l + i + 1)
    if b_next == 0:
        raise DomainError("B + i delta vanishes")
    a_prev = _a_of_b(b_prev, spec.delta, spec.alpha_sq)
    a_next = _a_of_b(b_next, spec.delta, spec.alpha_sq)
    return spec.kinetic_scale * a_prev**2, -spec.kinetic_scale * a_next**2


def shape_invariance_remainder(spec: PotentialSpec, l: int, i: int) -> float:
    """R(B_i) = V+[B_{i-1}] - V-[B_i] = (hbar^2/2mu) (A(B_{i-1})^2 - A(B_i)^2)."""
    up, down = _remainder_terms(spec, l, i)
    return up + down


def energy_susy(spec: PotentialSpec, q: QuantumNumbers) -> EnergyResult:
    """E0 plus the telescoping sum of remainders R(B_1) ... R(B_n_r).

    The sum is taken exactly (math.fsum over the two squared terms of each
    remainder) so near-threshold levels do not lose digits to cancellation.
    """
    ground = ground_energy(spec, q.l)
    terms = [_centrifugal_shift(spec, q.l), -spec.kinetic_scale * ground.intermediates["A"] ** 2]
    for i in range(1, q.n_r + 1):
        terms.extend(_remainder_terms(spec, q.l, i))
    energy = math.fsum(terms)
    inter = dict(ground.intermediates)
    inter["E0"] = ground.energy
    inter["A_n"] = coeffs_at(spec, q.l, q.n_r).A
    inter["closed_form"] = _closed_form(spec, q.l, q.n_r)
    return EnergyResult(energy=energy, method="SUSY", intermediates=inter)


def energy_susy_closed_form(spec: PotentialSpec, q: QuantumNumbers) -> float:
    return _closed_form(spec, q.l, q.n_r)
