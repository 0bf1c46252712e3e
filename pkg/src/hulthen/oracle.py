"""
Finite-difference eigensolver for the radial equation

    -(hbar^2 / 2 mu) chi'' + V_eff(r) chi = E chi,   chi(r_min) = chi(r_max) = 0.

Three-point central differences on a uniform grid give a symmetric
tridiagonal matrix. The discretization error is O(h^2) with a clean even
expansion, so the grid is refined by halving h and the eigenvalues are
Richardson-extrapolated (Romberg table) until successive extrapolants agree
to the requested tolerance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, StateNotFoundError
from .model import PotentialMode, PotentialSpec, QuantumNumbers, potential_effective
from .nu_solver import RadialWavefunction

logger = logging.getLogger(__name__)

NEAR_THRESHOLD = 1e-5


@dataclass(frozen=True)
class GridSpec:
    r_min: float
    r_max: float
    n_points: int = 8000

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise DomainError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.n_points < 500:
            raise DomainError(f"n_points must be >= 500, got {self.n_points}")

    @classmethod
    def default(cls, spec: PotentialSpec, n_points: int = 8000, rmax_factor: float = 50.0) -> "GridSpec":
        return cls(r_min=1e-6 / spec.delta, r_max=rmax_factor / spec.delta, n_points=n_points)

    def points(self, n_intervals: int | None = None) -> np.ndarray:
        """Interior nodes of a uniform grid on [0, r_max] with ``n_intervals`` cells.

        chi vanishes at r = 0 itself, so the inner Dirichlet node sits there;
        nodes below ``r_min`` are dropped (chi held at zero). A wall at
        r_min > 0 would lift s-wave levels by about (hbar^2/2mu) chi'(0)^2 r_min.
        """
        m = self.n_points + 1 if n_intervals is None else n_intervals
        r = np.arange(1, m) * (self.r_max / m)
        return r[r >= self.r_min]


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray
    node_counts: list[int]
    grid: GridSpec
    potential_mode: PotentialMode
    tolerances: np.ndarray = field(repr=False)
    converged: bool = True
    finest_points: int = 0
    tail_ratios: np.ndarray = field(default=None, repr=False)

    @property
    def truncation_sensitive(self) -> np.ndarray:
        return np.abs(self.eigenvalues) < NEAR_THRESHOLD

    def __len__(self):
        return len(self.eigenvalues)


def _negative_levels(diag, off, vectors=False):
    w = eigh_tridiagonal(diag, off, eigvals_only=True, select="v", select_range=(-np.inf, 0.0))
    if not vectors:
        return w, None
    if len(w) == 0:
        return w, np.empty((len(diag), 0))
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, len(w) - 1))


def _hamiltonian(spec, l, mode, grid, n_intervals):
    r = grid.points(n_intervals)
    h = r[1] - r[0]
    t = spec.kinetic_scale / h**2
    diag = 2.0 * t + potential_effective(spec, QuantumNumbers(0, l), r, mode)
    off = np.full(len(r) - 1, -t)
    return diag, off


def count_nodes(vec, rel_floor=1e-9) -> int:
    """Sign changes of a sampled function, ignoring values near zero."""
    v = np.asarray(vec)
    v = v[np.abs(v) > rel_floor * np.max(np.abs(v))]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))


def solve_radial(
    spec: PotentialSpec,
    l: int,
    mode: PotentialMode = "exact",
    grid: GridSpec | None = None,
    tol: float = 1e-7,
    max_points: int = 2**20,
) -> SpectrumResult:
    """All negative eigenvalues of the radial operator, grid-converged.

    Starts from ``grid.n_points`` interior points and doubles the number of
    cells until the Romberg extrapolants of every level change by less than
    ``tol``. Node counts and tail ratios come from the starting grid.
    """
    if l < 0:
        raise DomainError(f"l must be >= 0, got {l!r}")
    grid = grid or GridSpec.default(spec)
    m = grid.n_points + 1
    diag, off = _hamiltonian(spec, l, mode, grid, m)
    w0, vecs = _negative_levels(diag, off, vectors=True)
    nodes = [count_nodes(vecs[:, j]) for j in range(vecs.shape[1])]
    peak = np.max(np.abs(vecs), axis=0) if len(w0) else np.empty(0)
    tails = np.abs(vecs[-1, :]) / peak if len(w0) else np.empty(0)

    table = [[w0]]
    err = np.full(len(w0), np.inf)
    converged = False
    while len(w0):
        if 2 * m - 1 > max_points:
            break
        m *= 2
        diag, off = _hamiltonian(spec, l, mode, grid, m)
        w, _ = _negative_levels(diag, off)
        k = min(len(w), len(table[-1][0]))
        row = [w[:k]]
        for j, prev in enumerate(table[-1]):
            fac = 4.0 ** (j + 1)
            row.append(row[j] + (row[j] - prev[:k]) / (fac - 1.0))
        err = np.abs(row[-1] - table[-1][-1][:k])
        table.append([x[:k] for x in row])
        if np.all(err < tol):
            converged = True
            break
    best = table[-1][-1]
    k = len(best)
    if not converged and len(w0):
        logger.warning(
            "solve_radial(l=%d, mode=%s) not converged; max change %.3g", l, mode, float(np.max(err))
        )
    return SpectrumResult(
        eigenvalues=np.asarray(best),
        node_counts=nodes[:k],
        grid=grid,
        potential_mode=mode,
        tolerances=np.asarray(err[:k]) if len(w0) else np.empty(0),
        converged=converged or not len(w0),
        finest_points=m - 1,
        tail_ratios=tails[:k],
    )


def state_energy(spectrum: SpectrumResult, n_r: int) -> float:
    if n_r >= len(spectrum):
        raise StateNotFoundError(spectrum.potential_mode, n_r, len(spectrum))
    return float(spectrum.eigenvalues[n_r])


def approximation_gap(spec: PotentialSpec, q: QuantumNumbers, grid: GridSpec | None = None) -> float:
    """E_exact - E_approx for the state with n_r nodes."""
    exact = solve_radial(spec, q.l, "exact", grid)
    approx = solve_radial(spec, q.l, "approximated", grid)
    return state_energy(exact, q.n_r) - state_energy(approx, q.n_r)


# sixth-order central stencil for the second derivative
_D2_OFFSETS = np.arange(-3, 4)
_D2_WEIGHTS = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0


def ode_residual(chi: RadialWavefunction, E: float, grid: GridSpec | None = None, step: float | None = None) -> float:
    """Relative L2 residual of chi'' + (2 mu / hbar^2)(E - V_approx) chi = 0.

    chi'' is taken from a sixth-order finite-difference stencil with spacing
    ``step`` (default: 1/400 of the state's decay length) around each point
    of ``grid`` (default: [0.1/delta, 20/delta], 4000 points).
    """
    spec = chi.spec
    if grid is None:
        grid = GridSpec(0.1 / spec.delta, 20.0 / spec.delta, 4000)
    r = np.linspace(grid.r_min, grid.r_max, grid.n_points)
    if step is None:
        decay = 1.0 / (spec.delta * max(chi.sqrt_c, 1e-3))
        step = min(decay, 1.0 / spec.delta) / 400.0
    samples = chi.chi(r[None, :] + step * _D2_OFFSETS[:, None])
    d2 = _D2_WEIGHTS @ samples / step**2
    v = potential_effective(spec, chi.q, r, "approximated")
    resid = d2 + (E - v) / spec.kinetic_scale * samples[3]
    denom = np.linalg.norm(d2)
    return float(np.linalg.norm(resid) / denom) if denom > 0 else float(np.linalg.norm(resid))
