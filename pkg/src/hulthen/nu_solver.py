"""
Nikiforov-Uvarov solution of the radial Hulthen equation.

With s = exp(-delta r) the radial equation (C0 centrifugal scheme) takes the
hypergeometric-type form

    chi'' + (1 - s)/(s(1 - s)) chi' + sigma_tilde(s)/(s(1 - s))^2 chi = 0,
    sigma_tilde(s) = -eps^2 (1 - s)^2 - lam (C0 (1 - s)^2 + s) + alpha^2 s (1 - s)

and pi(s) = -s/2 +- sqrt((a - k) s^2 - (b - k) s + c) with

    a = 1/4 + eps^2 + lam C0 + alpha^2
    b = 2 eps^2 + 2 lam C0 + alpha^2 - lam
    c = eps^2 + lam C0.

Energies come from the closed form; the branch machinery (candidate
enumeration, selection, quantization residual) is kept as a check on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from . import specfun
from .errors import (
    BranchSelectionError,
    DegenerateDiscriminantError,
    DomainError,
    UnboundStateError,
)
from .model import (
    PotentialSpec,
    QuantumNumbers,
    dimensionless,
)

Method = Literal["NU", "SUSY", "NumericExact", "NumericApprox"]

QUANTIZATION_TOL = 1e-9


@dataclass(frozen=True)
class EnergyResult:
    energy: float
    method: Method
    intermediates: dict = field(default_factory=dict, compare=False)

    @property
    def bound(self) -> bool:
        return self.energy < 0


@dataclass(frozen=True)
class PiCandidate:
    """One linear pi(s) = intercept + slope * s with its k value."""

    k: float
    slope: float
    intercept: float
    k_sign: int  # +1 / -1: which root of the k quadratic
    branch_sign: int  # +1 / -1: outer sign in front of the square root

    @property
    def tau_slope(self) -> float:
        # tau = tau_tilde + 2 pi with tau_tilde = 1 - s
        return -1.0 + 2.0 * self.slope

    def __call__(self, s):
        return self.intercept + self.slope * np.asarray(s, dtype=float)


@dataclass(frozen=True)
class NuParameters:
    a: float
    b: float
    c: float
    k: float
    branch: PiCandidate

    @property
    def sqrt_c(self) -> float:
        return math.sqrt(self.c)

    @property
    def sqrt_cab(self) -> float:
        return math.sqrt(self.c + self.a - self.b)

    @property
    def K(self) -> float:
        return 0.5 + self.sqrt_cab

    @property
    def lambda_bar(self) -> float:
        return self.k + self.branch.slope


def _abc(spec: PotentialSpec, q: QuantumNumbers, epsilon_sq: float):
    lam = q.lam
    alpha_sq = spec.alpha_sq
    a = 0.25 + epsilon_sq + lam * spec.c0 + alpha_sq
    b = 2.0 * epsilon_sq + 2.0 * lam * spec.c0 + alpha_sq - lam
    c = epsilon_sq + lam * spec.c0
    return a, b, c


def pi_candidates(a: float, b: float, c: float) -> list[PiCandidate]:
    """The four linear pi(s) allowed by a vanishing discriminant.

    Ordered by preference for selection: (k-, -), (k+, -), (k-, +), (k+, +).
    """
    if c < 0 or c + a - b < 0:
        raise DegenerateDiscriminantError(
            f"negative radicand: c={c!r}, c+a-b={c + a - b!r}"
        )
    rc = math.sqrt(c)
    rd = math.sqrt(c + a - b)
    root = 2.0 * math.sqrt(c * c + c * (a - b))
    out = []
    for k_sign, inner in ((-1, rc + rd), (+1, rc - rd)):
        k = (b - 2.0 * c) + k_sign * root
        for branch_sign in (-1, +1):
            # pi = -s/2 +- (inner * s - sqrt(c))
            out.append(
                PiCandidate(
                    k=k,
                    slope=-0.5 + branch_sign * inner,
                    intercept=-branch_sign * rc,
                    k_sign=k_sign,
                    branch_sign=branch_sign,
                )
            )
    return [out[0], out[2], out[1], out[3]]


def select_branch(candidates: list[PiCandidate]) -> PiCandidate:
    """First candidate (in preference order) whose tau(s) has negative slope."""
    for cand in candidates:
        if cand.tau_slope < 0:
            return cand
    raise BranchSelectionError("no pi(s) candidate yields tau'(s) < 0")


def nu_parameters(spec: PotentialSpec, q: QuantumNumbers, epsilon_sq: float) -> NuParameters:
    if epsilon_sq < 0:
        raise DomainError(f"epsilon_sq must be >= 0, got {epsilon_sq!r}")
    a, b, c = _abc(spec, q, epsilon_sq)
    chosen = select_branch(pi_candidates(a, b, c))
    return NuParameters(a=a, b=b, c=c, k=chosen.k, branch=chosen)


def quantization_residual(spec: PotentialSpec, q: QuantumNumbers, epsilon_sq: float) -> float:
    """lambda_bar - lambda_bar_n for the selected branch; zero on an eigenvalue.

    lambda_bar_n = -n tau' - n(n - 1)/2 sigma'' with sigma'' = -2.
    """
    p = nu_parameters(spec, q, epsilon_sq)
    n = q.n_r
    rhs = -n * p.branch.tau_slope + n * (n - 1)
    return p.lambda_bar - rhs


def epsilon_sq_closed_form(q: QuantumNumbers, alpha_sq: float, c0: float) -> float:
    N = q.principal
    return (N / 2.0 - alpha_sq / (2.0 * N)) ** 2 - q.lam * c0


def signed_sqrt_c(q: QuantumNumbers, alpha_sq: float) -> float:
    """Root of the quantization condition, sqrt(c) = alpha^2/(2N) - N/2.

    Positive exactly when the state is normalizable; the closed form for
    epsilon^2 only sees its square.
    """
    N = q.principal
    return alpha_sq / (2.0 * N) - N / 2.0


def energy_nu(spec: PotentialSpec, q: QuantumNumbers) -> EnergyResult:
    N = q.principal
    mu, hbar, delta = spec.mu, spec.hbar, spec.delta
    energy = (
        -hbar**2 / (2.0 * mu) * (N * delta / 2.0 - mu * spec.Z / (hbar**2 * N)) ** 2
        + hbar**2 * delta**2 * q.lam * spec.c0 / (2.0 * mu)
    )
    eps_sq = dimensionless(spec, energy).epsilon_sq
    sqrt_c = signed_sqrt_c(q, spec.alpha_sq)
    inter = {
        "alpha_sq": spec.alpha_sq,
        "epsilon_sq": eps_sq,
        "sqrt_c": sqrt_c,
        "K": float(q.l + 1),
        "normalizable": sqrt_c > 0,
    }
    if sqrt_c > 0 and eps_sq >= 0:
        res = quantization_residual(spec, q, eps_sq)
        scale = max(1.0, spec.alpha_sq)
        if abs(res) > QUANTIZATION_TOL * scale:
            raise AssertionError(f"closed-form energy fails quantization: residual {res!r}")
        inter["quantization_residual"] = res
        inter["K"] = nu_parameters(spec, q, eps_sq).K
    return EnergyResult(energy=energy, method="NU", intermediates=inter)


def _log_norm_constant(n: int, sqrt_c: float, K: float, delta: float) -> float:
    lg = specfun.log_gamma
    log_sq = (
        lg(n + 1)
        + math.log(2.0 * sqrt_c)
        + math.log(n + K + sqrt_c)
        + lg(2.0 * (K + sqrt_c) + n)
        - math.log(1.0 / delta)
        - math.log(n + K)
        - lg(n + 2.0 * sqrt_c + 1.0)
        - lg(n + 2.0 * K)
    )
    return 0.5 * log_sq


def normalization_constant(spec: PotentialSpec, q: QuantumNumbers) -> float:
    """C_{n_r} making the integral of chi(r)^2 over (0, inf) equal to 1.

    The Jacobian of s = exp(-delta r) contributes the factor 1/delta.
    """
    sqrt_c = signed_sqrt_c(q, spec.alpha_sq)
    if sqrt_c <= 0:
        raise UnboundStateError(
            f"{q.label}: no normalizable eigenfunction (sqrt(c) = {sqrt_c:.6g} <= 0)"
        )
    return math.exp(_log_norm_constant(q.n_r, sqrt_c, q.l + 1.0, spec.delta))


@dataclass(frozen=True)
class RadialWavefunction:
    """chi(s) = C s^sqrt(c) (1 - s)^K P_n^{(2 sqrt(c), 2K - 1)}(1 - 2s), s = exp(-delta r)."""

    spec: PotentialSpec
    q: QuantumNumbers
    sqrt_c: float
    K: float
    norm_const: float
    energy: float

    @property
    def degree(self) -> int:
        return self.q.n_r

    @cached_property
    def _jacobi(self) -> specfun.JacobiParams:
        return specfun.JacobiParams(self.q.n_r, 2.0 * self.sqrt_c, 2.0 * self.K - 1.0)

    def _eval(self, s, one_minus_s):
        s = np.asarray(s, dtype=float)
        one_minus_s = np.asarray(one_minus_s, dtype=float)
        with np.errstate(divide="ignore"):
            log_env = (
                math.log(self.norm_const)
                + self.sqrt_c * np.log(s)
                + self.K * np.log(one_minus_s)
            )
        poly = specfun.jacobi_poly(self._jacobi, one_minus_s - s)
        out = np.exp(log_env) * poly
        return float(out) if out.ndim == 0 else out

    def chi_s(self, s):
        """chi as a function of s in (0, 1)."""
        s = np.asarray(s, dtype=float)
        return self._eval(s, 1.0 - s)

    def chi(self, r):
        """chi(r) = r R(r); normalized on (0, inf)."""
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise DomainError("r must be > 0")
        x = -self.spec.delta * r
        return self._eval(np.exp(x), -np.expm1(x))

    __call__ = chi

    def radial(self, r):
        """R(r) = chi(r) / r."""
        return self.chi(r) / np.asarray(r, dtype=float)


def wavefunction(spec: PotentialSpec, q: QuantumNumbers) -> RadialWavefunction:
    sqrt_c = signed_sqrt_c(q, spec.alpha_sq)
    if sqrt_c <= 0:
        raise UnboundStateError(
            f"{q.label}: no normalizable eigenfunction (sqrt(c) = {sqrt_c:.6g} <= 0)"
        )
    return RadialWavefunction(
        spec=spec,
        q=q,
        sqrt_c=sqrt_c,
        K=q.l + 1.0,
        norm_const=normalization_constant(spec, q),
        energy=energy_nu(spec, q).energy,
    )
