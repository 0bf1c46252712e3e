"""
Physical parameters and potential functions for the Hulthen problem.

The Hulthen potential

    V(r) = -Z e^2 delta exp(-delta r) / (1 - exp(-delta r))

behaves like -Z e^2 / r near the origin and decays exponentially for
delta r >> 1. For l > 0 the centrifugal barrier l(l+1) hbar^2 / (2 mu r^2)
is replaced by

    hbar^2 l(l+1) delta^2 / (2 mu) * [C0 + exp(-delta r) / (1 - exp(-delta r))^2]

which makes the radial equation solvable in closed form. C0 = 0 is the
Greene-Aldrich scheme, C0 = 1/12 the improved scheme that cancels the
constant term of the small-r expansion.

Units default to atomic units (hbar = mu = e = 1); e^2 is folded into Z.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DomainError

PotentialMode = Literal["exact", "approximated"]

C0_IMPROVED = 1.0 / 12.0

_ORBITAL_LETTERS = "spdfghiklmnoqrtuv"


@dataclass(frozen=True)
class PotentialSpec:
    """Hulthen potential parameters.

    Attributes
    ----------
    delta : float
        Screening parameter (inverse length).
    Z : float
        Charge strength; multiplies e^2, which is 1 in atomic units.
    mu : float
        Reduced mass.
    hbar : float
        Reduced Planck constant.
    c0 : float
        Constant of the centrifugal approximation (0 or 1/12 in practice).
    """

    delta: float
    Z: float = 1.0
    mu: float = 1.0
    hbar: float = 1.0
    c0: float = C0_IMPROVED

    def __post_init__(self):
        for name in ("delta", "Z", "mu", "hbar"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
        if not np.isfinite(self.c0) or self.c0 < 0:
            raise DomainError(f"c0 must be >= 0, got {self.c0!r}")

    @property
    def kinetic_scale(self) -> float:
        """hbar^2 / (2 mu)."""
        return self.hbar**2 / (2.0 * self.mu)

    @property
    def alpha_sq(self) -> float:
        """Dimensionless coupling 2 mu Z e^2 / (hbar^2 delta)."""
        return 2.0 * self.mu * self.Z / (self.hbar**2 * self.delta)

    def with_c0(self, c0: float) -> "PotentialSpec":
        return PotentialSpec(delta=self.delta, Z=self.Z, mu=self.mu, hbar=self.hbar, c0=c0)

    def with_delta(self, delta: float) -> "PotentialSpec":
        return PotentialSpec(delta=delta, Z=self.Z, mu=self.mu, hbar=self.hbar, c0=self.c0)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number n_r (node count) and orbital quantum number l."""

    n_r: int
    l: int

    def __post_init__(self):
        if int(self.n_r) != self.n_r or self.n_r < 0:
            raise DomainError(f"n_r must be a nonnegative integer, got {self.n_r!r}")
        if int(self.l) != self.l or self.l < 0:
            raise DomainError(f"l must be a nonnegative integer, got {self.l!r}")

    @property
    def principal(self) -> int:
        """N = n_r + l + 1."""
        return self.n_r + self.l + 1

    @property
    def lam(self) -> int:
        """l(l+1)."""
        return self.l * (self.l + 1)

    @property
    def label(self) -> str:
        if self.l < len(_ORBITAL_LETTERS):
            return f"{self.principal}{_ORBITAL_LETTERS[self.l]}"
        return f"{self.n_r},{self.l}"

    @classmethod
    def parse(cls, text: str) -> "QuantumNumbers":
        """Parse a spectroscopic label ("2p") or an explicit "n_r,l" pair."""
        text = text.strip()
        m = re.fullmatch(r"(\d+)\s*,\s*(\d+)", text)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"(\d+)([a-zA-Z])", text)
        if not m:
            raise ValueError(f"cannot parse state {text!r}; expected e.g. '2p' or '0,1'")
        principal = int(m.group(1))
        letter = m.group(2).lower()
        if letter not in _ORBITAL_LETTERS:
            raise ValueError(f"unknown orbital letter {letter!r} in {text!r}")
        l = _ORBITAL_LETTERS.index(letter)
        n_r = principal - l - 1
        if n_r < 0:
            raise ValueError(
                f"state {text!r} needs n_r = N - l - 1 >= 0, got {principal} - {l} - 1 = {n_r}"
            )
        return cls(n_r, l)


@dataclass(frozen=True)
class DimensionlessParams:
    alpha_sq: float
    epsilon_sq: float


def _screened(spec, r):
    """exp(-delta r) / (1 - exp(-delta r)) written as 1 / expm1(delta r)."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be > 0")
    return 1.0 / np.expm1(spec.delta * r)


def _as_output(value):
    return float(value) if np.ndim(value) == 0 else value


def potential_hulthen(spec: PotentialSpec, r):
    """Bare Hulthen potential V_H(r); r may be a scalar or an array."""
    return _as_output(-spec.Z * spec.delta * _screened(spec, r))


def centrifugal_approximation(spec: PotentialSpec, r):
    """delta^2 [C0 + y(1 + y)] with y = 1/expm1(delta r); stands in for 1/r^2."""
    y = _screened(spec, r)
    return _as_output(spec.delta**2 * (spec.c0 + y * (1.0 + y)))


def potential_effective(spec: PotentialSpec, q: QuantumNumbers, r, mode: PotentialMode = "exact"):
    """Effective radial potential V_H + centrifugal term.

    ``mode="exact"`` uses hbar^2 l(l+1) / (2 mu r^2); ``mode="approximated"``
    substitutes the C0 scheme, including its constant shift.
    """
    r = np.asarray(r, dtype=float)
    v = potential_hulthen(spec, r)
    if q.l == 0:
        return v
    if mode == "exact":
        barrier = 1.0 / r**2
    elif mode == "approximated":
        barrier = centrifugal_approximation(spec, r)
    else:
        raise ValueError(f"unknown potential mode {mode!r}")
    return _as_output(v + spec.kinetic_scale * q.lam * barrier)


def dimensionless(spec: PotentialSpec, energy: float) -> DimensionlessParams:
    """alpha^2 and epsilon^2 = -2 mu E / (hbar^2 delta^2). Negative epsilon^2 means E > 0."""
    eps_sq = -energy / (spec.kinetic_scale * spec.delta**2)
    return DimensionlessParams(alpha_sq=spec.alpha_sq, epsilon_sq=eps_sq)


def energy_from_epsilon_sq(spec: PotentialSpec, epsilon_sq: float) -> float:
    return -spec.kinetic_scale * spec.delta**2 * epsilon_sq
