"""
Acceptance gate: one test per criterion, each printing a single
PASS/FAIL line with the measured quantity next to its tolerance.

Run alone with ``pytest tests/test_acceptance.py -v`` (or ``python
tests/test_acceptance.py``).
"""

import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import TWELFTH, exact_energy
from hulthen import reference, reports
from hulthen.model import C0_IMPROVED, PotentialSpec, QuantumNumbers
from hulthen.nu_solver import (
    energy_nu,
    epsilon_sq_closed_form,
    quantization_residual,
    signed_sqrt_c,
    wavefunction,
)
from hulthen.oracle import approximation_gap, ode_residual, solve_radial
from hulthen.specfun import JacobiParams, hyp2f1_terminating, jacobi_poly, log_gamma
from hulthen.susy_solver import (
    energy_susy,
    ground_energy,
    riccati_residual,
    superpotential_coeffs,
)
from hulthen.verification import (
    normalization_integral,
    riccati_points,
    shape_invariance_error,
)

SWEEP_DELTAS = ("0.025", "0.05", "0.075", "0.1", "0.15", "0.2", "0.25", "0.3", "0.35")
C0S = (0.0, C0_IMPROVED)
FORMULA_FOR_FLAGGED = {("2p", 0.200): -0.045, ("4p", 0.100): -0.00125}


def report(capsys, number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}"
    with capsys.disabled():
        print("\n" + line)
    return ok


def table_i_states(max_delta=None):
    """Distinct (state, delta) rows of Table I."""
    return [(s, d) for s, d, *_ in reference.TABLE_I if max_delta is None or d <= max_delta]


def normalizable(state, delta):
    q = QuantumNumbers.parse(state)
    return signed_sqrt_c(q, PotentialSpec(delta=delta).alpha_sq) > 0


def test_criterion_1_table_one(capsys):
    t0 = time.perf_counter()
    failures = []
    checked = 0
    for cell in reference.table_i_cells():
        method, _, c0_text = cell.column.partition("_c0_")
        spec = PotentialSpec(delta=cell.delta, c0=0.0 if c0_text == "0" else C0_IMPROVED)
        q = QuantumNumbers.parse(cell.state)
        e = (energy_nu if method == "nu" else energy_susy)(spec, q).energy
        key = (cell.state, cell.delta, cell.column)
        if key in reference.FLAGGED_MISPRINTS:
            target = FORMULA_FOR_FLAGGED[(cell.state, cell.delta)]
        else:
            target = cell.value
        checked += 1
        if abs(e - target) > 5e-7:
            failures.append((cell.state, cell.delta, cell.column, cell.printed, e))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 1.0
    worst = max((abs(e - float(p)) for *_, p, e in failures), default=0.0)
    detail = f"{checked - len(failures)}/{checked} cells within 5e-7 in {elapsed:.3f}s"
    if failures:
        rows = sorted({(s, d) for s, d, *_ in failures})
        detail += f"; {len(failures)} unflagged cells differ (max {worst:.2e}) in rows {rows}"
    report(capsys, 1, "Table I reproduction", ok, detail)
    assert ok, failures


def test_criterion_2_nu_susy_identity(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    count = 0
    for d in SWEEP_DELTAS:
        for c0, c0_exact in ((0.0, Fraction(0)), (C0_IMPROVED, TWELFTH)):
            spec = PotentialSpec(delta=float(d), c0=c0)
            for n_r in range(7):
                for l in range(6):
                    q = QuantumNumbers(n_r, l)
                    e_nu = energy_nu(spec, q).energy
                    e_susy = energy_susy(spec, q).energy
                    if exact_energy(q.label, d, c0_exact) == 0:
                        # relative error undefined at E = 0; scale by the C0 shift instead
                        err = abs(e_nu - e_susy) / (spec.delta**2 * q.lam * c0 / 2)
                    else:
                        err = abs(e_nu - e_susy) / abs(e_nu)
                    worst = max(worst, err)
                    count += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-12 and elapsed < 1.0
    report(capsys, 2, "NU = SUSY", ok, f"max relative diff {worst:.2e} (tol 1e-12) over {count} cases in {elapsed:.3f}s")
    assert ok


def test_criterion_3_oracle_approximated(capsys):
    t0 = time.perf_counter()
    worst, count, missing = 0.0, 0, []
    for state, d in table_i_states(max_delta=0.15):
        q = QuantumNumbers.parse(state)
        for c0 in C0S:
            spec = PotentialSpec(delta=d, c0=c0)
            e = energy_nu(spec, q).energy
            if e >= 0 or not normalizable(state, d):
                continue
            res = reports.spectrum(spec, q.l, "approximated")
            if q.n_r >= len(res):
                missing.append((state, d, c0))
                continue
            worst = max(worst, abs(res.eigenvalues[q.n_r] - e))
            count += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-6 and not missing and elapsed < 120
    report(capsys, 3, "oracle (approximated) vs closed form", ok,
           f"max |diff| {worst:.2e} (tol 1e-6) over {count} states, {len(missing)} missing, {elapsed:.1f}s")
    assert ok


def test_criterion_4_oracle_exact(capsys):
    t0 = time.perf_counter()
    worst, count = 0.0, 0
    for state in ("2p", "3p", "3d"):
        q = QuantumNumbers.parse(state)
        for d in (0.025, 0.05, 0.075, 0.1):
            res = reports.spectrum(PotentialSpec(delta=d, c0=0.0), q.l, "exact")
            worst = max(worst, abs(abs(res.eigenvalues[q.n_r]) - reference.table_ii_lookup(state, d)))
            count += 1
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-4 and elapsed < 60
    report(capsys, 4, "oracle (exact) vs published numerics", ok,
           f"max |diff| {worst:.2e} (tol 1e-4) over {count} states, {elapsed:.1f}s")
    assert ok


def test_criterion_5_large_screening(capsys):
    deltas = (0.025, 0.1, 0.2, 0.3, 0.35)
    gaps = [abs(approximation_gap(PotentialSpec(delta=d), QuantumNumbers(0, 1))) for d in deltas]
    monotone = all(b > a for a, b in zip(gaps, gaps[1:]))
    ok = monotone and gaps[-1] > 1e-3
    report(capsys, 5, "large-screening degradation", ok,
           "2p gaps " + ", ".join(f"{g:.3e}" for g in gaps) + f" (monotone={monotone}, last > 1e-3)")
    assert ok


def test_criterion_6_normalization(capsys):
    worst, count = 0.0, 0
    for state, d in table_i_states():
        if not normalizable(state, d):
            continue
        for c0 in C0S:
            spec = PotentialSpec(delta=d, c0=c0)
            if energy_nu(spec, QuantumNumbers.parse(state)).energy >= 0:
                continue
            worst = max(worst, abs(normalization_integral(spec, QuantumNumbers.parse(state)) - 1.0))
            count += 1
    ok = worst < 1e-8
    report(capsys, 6, "normalization", ok, f"max |integral - 1| {worst:.2e} (tol 1e-8) over {count} states")
    assert ok


def test_criterion_7_riccati_shape_invariance(capsys):
    worst_ric, worst_shape, count = 0.0, 0.0, 0
    for d in SWEEP_DELTAS:
        for c0 in C0S:
            spec = PotentialSpec(delta=float(d), c0=c0)
            for l in range(6):
                c = superpotential_coeffs(spec, l)
                e0 = ground_energy(spec, l).energy
                res = riccati_residual(c, spec, QuantumNumbers(0, l), e0, riccati_points(spec.delta))
                worst_ric = max(worst_ric, float(np.max(np.abs(res))))
                for i in range(1, 6):
                    worst_shape = max(worst_shape, *shape_invariance_error(spec, l, i))
                    count += 1
    ok = worst_ric < 1e-10 and worst_shape < 1e-10
    report(capsys, 7, "Riccati + shape invariance", ok,
           f"max Riccati residual {worst_ric:.2e}, max shape spread/offset {worst_shape:.2e} (tol 1e-10), {count} steps")
    assert ok


def test_criterion_8_ode_residual(capsys):
    worst, count = 0.0, 0
    for state, d in table_i_states():
        if not normalizable(state, d):
            continue
        for c0 in C0S:
            w = wavefunction(PotentialSpec(delta=d, c0=c0), QuantumNumbers.parse(state))
            worst = max(worst, ode_residual(w, w.energy))
            count += 1
    ok = worst < 1e-6
    report(capsys, 8, "ODE residual", ok, f"max relative L2 residual {worst:.2e} (tol 1e-6) over {count} eigenpairs")
    assert ok


def _jacobi_samples():
    yield 2, 1.2, 0.7, 1 - 2 * 0.35
    s = np.linspace(0.05, 0.95, 10)
    for state, d in table_i_states():
        if not normalizable(state, d):
            continue
        q = QuantumNumbers.parse(state)
        sc = signed_sqrt_c(q, PotentialSpec(delta=d).alpha_sq)
        for n in range(7):
            for x in 1 - 2 * s:
                yield n, 2 * sc, 2 * q.l + 1, x


def test_criterion_9_special_functions(capsys):
    worst_j = 0.0
    for n, a, b, x in _jacobi_samples():
        lhs = jacobi_poly(JacobiParams(n, a, b), x)
        pref = np.exp(log_gamma(n + a + 1) - log_gamma(n + 1) - log_gamma(a + 1))
        rhs = pref * hyp2f1_terminating(n, a + b + n + 1, 1 + a, (1 - x) / 2)
        worst_j = max(worst_j, abs(lhs - rhs) / max(1.0, abs(rhs)))
    worst_q, count = 0.0, 0
    for d in SWEEP_DELTAS:
        for c0 in C0S:
            spec = PotentialSpec(delta=float(d), c0=c0)
            for n_r in range(7):
                for l in range(6):
                    q = QuantumNumbers(n_r, l)
                    eps = epsilon_sq_closed_form(q, spec.alpha_sq, c0)
                    if signed_sqrt_c(q, spec.alpha_sq) <= 0 or eps < 0:
                        continue
                    worst_q = max(worst_q, abs(quantization_residual(spec, q, eps)))
                    count += 1
    ok = worst_j < 1e-12 and worst_q < 1e-9
    report(capsys, 9, "special-function identities", ok,
           f"Jacobi vs 2F1 max rel diff {worst_j:.2e} (tol 1e-12); quantization residual max {worst_q:.2e} (tol 1e-9) over {count} states")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
