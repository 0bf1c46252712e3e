import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import TWELFTH, exact_energy
from hulthen.errors import DegenerateDiscriminantError, DomainError, UnboundStateError
from hulthen.model import PotentialSpec, QuantumNumbers
from hulthen.nu_solver import (
    energy_nu,
    epsilon_sq_closed_form,
    normalization_constant,
    nu_parameters,
    pi_candidates,
    quantization_residual,
    select_branch,
    signed_sqrt_c,
    wavefunction,
)
from hulthen.oracle import count_nodes
from hulthen.specfun import log_gamma, quadrature
from hulthen.verification import normalization_integral

P2 = QuantumNumbers(0, 1)
DELTAS = (0.025, 0.05, 0.075, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35)


def test_parameters_2p_example():
    p = nu_parameters(PotentialSpec(delta=0.025, c0=0.0), P2, 361.0)
    assert (p.a, p.b, p.c) == pytest.approx((441.25, 800.0, 361.0), rel=1e-15)
    assert p.c + p.a - p.b == pytest.approx(2.25, rel=1e-13)
    assert p.sqrt_cab == pytest.approx(1.5, rel=1e-13)
    assert p.K == pytest.approx(2.0, abs=1e-12)


def test_parameters_zero_case():
    # alpha^2 = 0 is outside PotentialSpec, so exercise the candidates directly
    cands = pi_candidates(0.25, 0.0, 0.0)
    chosen = select_branch(cands)
    assert chosen.k == 0.0
    assert 0.5 + math.sqrt(0.0 + 0.25 - 0.0) == 1.0


def test_minus_root_and_eq_form_selected():
    p = nu_parameters(PotentialSpec(delta=0.025, c0=0.0), P2, 361.0)
    root = 2 * math.sqrt(p.c**2 + p.c * (p.a - p.b))
    assert p.k == pytest.approx((p.b - 2 * p.c) - root, rel=1e-14)
    assert p.branch.intercept == pytest.approx(p.sqrt_c)
    assert p.branch.slope == pytest.approx(-0.5 - (p.sqrt_c + p.sqrt_cab))
    assert p.branch.tau_slope == pytest.approx(-43.0, rel=1e-13)


def test_branch_slopes_2p():
    a, b, c = 441.25, 800.0, 361.0
    slopes = sorted(round(x.tau_slope, 9) for x in pi_candidates(a, b, c))
    # tau' = -2 +- 2(sqrt(c) +- sqrt(c+a-b)) with sqrt(c) = 19, sqrt(c+a-b) = 1.5
    assert slopes == [-43.0, -37.0, 33.0, 39.0]
    upper = [x for x in pi_candidates(a, b, c) if x.branch_sign > 0]
    assert all(x.tau_slope > 0 for x in upper)


@pytest.mark.parametrize(
    "state, delta",
    [("2p", 0.025), ("3p", 0.025), ("4f", 0.025), ("6g", 0.025), ("2p", 0.1), ("3d", 0.1), ("6g", 0.1)],
)
def test_candidates_satisfy_defining_identity(state, delta):
    spec = PotentialSpec(delta=delta)
    q = QuantumNumbers.parse(state)
    eps_sq = epsilon_sq_closed_form(q, spec.alpha_sq, spec.c0)
    p = nu_parameters(spec, q, eps_sq)
    s = np.linspace(0.1, 0.9, 9)
    lam = q.lam
    sigma = s * (1 - s)
    sigma_tilde = -eps_sq * (1 - s) ** 2 - lam * (spec.c0 * (1 - s) ** 2 + s) + spec.alpha_sq * s * (1 - s)
    # (pi - (sigma' - tau_tilde)/2)^2 with sigma' - tau_tilde = (1 - 2s) - (1 - s) = -s
    for cand in pi_candidates(p.a, p.b, p.c):
        lhs = (cand(s) + s / 2) ** 2
        rhs = (-s / 2) ** 2 - sigma_tilde + cand.k * sigma
        np.testing.assert_allclose(lhs, rhs, rtol=1e-9, atol=1e-9 * np.max(np.abs(rhs)))


def test_c_zero_roots_coincide():
    ks = {round(x.k, 12) for x in pi_candidates(3.0, 1.5, 0.0)}
    assert ks == {1.5}


def test_negative_radicand_rejected():
    with pytest.raises(DegenerateDiscriminantError):
        pi_candidates(1.0, 5.0, 1.0)
    with pytest.raises(DegenerateDiscriminantError):
        pi_candidates(1.0, 0.0, -1.0)
    with pytest.raises(DomainError):
        nu_parameters(PotentialSpec(delta=0.1), P2, -1.0)


@given(
    n_r=st.integers(0, 6),
    l=st.integers(0, 5),
    delta=st.sampled_from(DELTAS),
    c0=st.sampled_from([0.0, 1 / 12]),
)
def test_k_identity(n_r, l, delta, c0):
    spec = PotentialSpec(delta=delta, c0=c0)
    q = QuantumNumbers(n_r, l)
    eps_sq = max(epsilon_sq_closed_form(q, spec.alpha_sq, c0), 0.0)
    assert abs(nu_parameters(spec, q, eps_sq).K - (l + 1)) < 1e-10


def test_epsilon_sq_examples():
    assert epsilon_sq_closed_form(P2, 80.0, 0.0) == pytest.approx(361.0, rel=1e-15)
    assert epsilon_sq_closed_form(P2, 80.0, 1 / 12) == pytest.approx(361.0 - 2 / 12, rel=1e-15)
    for n_r, l in [(0, 0), (1, 2), (3, 1)]:
        q = QuantumNumbers(n_r, l)
        assert epsilon_sq_closed_form(q, q.principal**2, 0.0) == 0.0


@pytest.mark.parametrize(
    "state, delta, c0, printed",
    [
        ("2p", "0.025", 0, -0.1128125),
        ("2p", "0.025", TWELFTH, -0.1127604),
        ("3p", "0.050", TWELFTH, -0.03315972),
    ],
)
def test_energy_nu_table_examples(state, delta, c0, printed):
    e = energy_nu(PotentialSpec(delta=float(delta), c0=float(c0)), QuantumNumbers.parse(state))
    assert e.energy == pytest.approx(float(exact_energy(state, delta, c0)), rel=1e-14)
    assert abs(e.energy - printed) <= 5e-7
    assert e.bound and e.method == "NU"


def test_energy_nu_misprinted_cell_uses_formula():
    e = energy_nu(PotentialSpec(delta=0.2, c0=0.0), P2).energy
    assert e == pytest.approx(-0.045, rel=1e-13)
    assert abs(e - (-0.45000)) > 0.4


def test_energy_nu_intermediates():
    res = energy_nu(PotentialSpec(delta=0.025, c0=0.0), P2)
    inter = res.intermediates
    assert inter["alpha_sq"] == pytest.approx(80.0)
    assert inter["epsilon_sq"] == pytest.approx(361.0)
    assert inter["sqrt_c"] == pytest.approx(19.0)
    assert inter["K"] == pytest.approx(2.0)
    assert abs(inter["quantization_residual"]) < 1e-9


def test_unbound_state_flagged_not_raised():
    res = energy_nu(PotentialSpec(delta=0.1, c0=1 / 12), QuantumNumbers(0, 3))
    assert not res.bound
    assert res.energy == pytest.approx(float(exact_energy("4f", "0.1", TWELFTH)), rel=1e-13)


def test_past_critical_screening_not_normalizable():
    # the closed form turns negative again once sqrt(c) < 0; the sign is kept
    res = energy_nu(PotentialSpec(delta=0.35, c0=0.0), QuantumNumbers(3, 1))
    assert res.bound
    assert not res.intermediates["normalizable"]
    assert res.intermediates["sqrt_c"] < 0
    with pytest.raises(UnboundStateError):
        wavefunction(PotentialSpec(delta=0.35, c0=0.0), QuantumNumbers(3, 1))


@given(
    n_r=st.integers(0, 6),
    l=st.integers(0, 5),
    delta=st.floats(0.01, 0.4),
    Z=st.floats(0.5, 3.0),
    mu=st.floats(0.5, 2.0),
    hbar=st.floats(0.5, 2.0),
)
def test_c0_zero_reduction(n_r, l, delta, Z, mu, hbar):
    spec = PotentialSpec(delta=delta, Z=Z, mu=mu, hbar=hbar, c0=0.0)
    N = n_r + l + 1
    expected = -hbar**2 / (2 * mu) * (N * delta / 2 - mu * Z / (hbar**2 * N)) ** 2
    assert energy_nu(spec, QuantumNumbers(n_r, l)).energy == pytest.approx(expected, rel=1e-13, abs=1e-300)


@given(n_r=st.integers(0, 6), delta=st.sampled_from(DELTAS), c0=st.floats(0.0, 1.0))
def test_s_wave_independent_of_c0(n_r, delta, c0):
    q = QuantumNumbers(n_r, 0)
    a = energy_nu(PotentialSpec(delta=delta, c0=c0), q).energy
    b = energy_nu(PotentialSpec(delta=delta, c0=0.0), q).energy
    assert a == b


def test_quantization_residual_zero_at_closed_form():
    spec = PotentialSpec(delta=0.025, c0=0.0)
    eps = epsilon_sq_closed_form(P2, 80.0, 0.0)
    assert abs(quantization_residual(spec, P2, eps)) < 1e-9


def test_quantization_residual_brackets_root():
    spec = PotentialSpec(delta=0.025, c0=0.0)
    lo = quantization_residual(spec, P2, 360.0)
    hi = quantization_residual(spec, P2, 362.0)
    assert lo != 0 and hi != 0
    assert np.sign(lo) == -np.sign(hi)


def test_quantization_residual_ground_state_form():
    spec = PotentialSpec(delta=0.05, c0=0.0)
    eps = 123.4
    p = nu_parameters(spec, P2, eps)
    lhs = p.b - 2 * p.c - 2 * math.sqrt(p.c**2 + p.c * (p.a - p.b)) - (0.5 + p.sqrt_c + p.sqrt_cab)
    assert quantization_residual(spec, P2, eps) == pytest.approx(lhs, rel=1e-12)


def bound_states(n_max=6, l_max=5):
    for delta in DELTAS:
        for c0 in (0.0, 1 / 12):
            spec = PotentialSpec(delta=delta, c0=c0)
            for n_r in range(n_max + 1):
                for l in range(l_max + 1):
                    q = QuantumNumbers(n_r, l)
                    if signed_sqrt_c(q, spec.alpha_sq) > 0:
                        yield spec, q


def test_quantization_sweep():
    worst = 0.0
    for spec, q in bound_states():
        eps = epsilon_sq_closed_form(q, spec.alpha_sq, spec.c0)
        if eps >= 0:
            worst = max(worst, abs(quantization_residual(spec, q, eps)))
    assert worst < 1e-9


def test_wavefunction_ground_state_form():
    spec = PotentialSpec(delta=0.025, c0=0.0)
    w = wavefunction(spec, P2)
    s = np.linspace(0.05, 0.95, 10)
    np.testing.assert_allclose(w.chi_s(s), w.norm_const * s**w.sqrt_c * (1 - s) ** 2, rtol=1e-12)
    assert w.degree == 0 and w.K == 2.0 and w.sqrt_c == pytest.approx(19.0)


@pytest.mark.parametrize("state", ["2p", "3p", "4d", "6p"])
def test_wavefunction_vanishes_at_ends(state):
    w = wavefunction(PotentialSpec(delta=0.025), QuantumNumbers.parse(state))
    assert abs(w.chi_s(1e-12)) < 1e-20
    assert abs(w.chi_s(1 - 1e-9)) < 1e-12
    assert w.chi(1e-8) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("state", ["2p", "3p", "4p", "5d", "6p"])
def test_node_count(state):
    q = QuantumNumbers.parse(state)
    w = wavefunction(PotentialSpec(delta=0.025, c0=0.0), q)
    r = np.linspace(1e-3, 60.0 / (0.025 * w.sqrt_c), 20000)
    assert count_nodes(w.chi(r)) == q.n_r


def test_radial_is_chi_over_r():
    w = wavefunction(PotentialSpec(delta=0.05), QuantumNumbers(1, 1))
    r = np.array([0.5, 3.0, 10.0])
    np.testing.assert_allclose(w.radial(r), w.chi(r) / r, rtol=1e-15)
    assert w(3.0) == w.chi(3.0)


def test_wavefunction_unbound_raises():
    with pytest.raises(UnboundStateError, match="no normalizable eigenfunction"):
        wavefunction(PotentialSpec(delta=0.35), QuantumNumbers(3, 1))
    with pytest.raises(UnboundStateError):
        normalization_constant(PotentialSpec(delta=0.35), QuantumNumbers(3, 1))


def test_wavefunction_rejects_nonpositive_r():
    w = wavefunction(PotentialSpec(delta=0.05), P2)
    with pytest.raises(DomainError):
        w.chi(0.0)


def test_normalization_quadrature_over_40_over_delta():
    for state in ("2p", "3p", "3d"):
        spec = PotentialSpec(delta=0.05)
        w = wavefunction(spec, QuantumNumbers.parse(state))
        res = quadrature(lambda r: w.chi(r) ** 2, 0.0, 40.0 / spec.delta, nodes=64)
        assert res.value == pytest.approx(1.0, abs=1e-8)


def test_normalization_sweep():
    worst = max(abs(normalization_integral(spec, q) - 1.0) for spec, q in bound_states(4, 4))
    assert worst < 1e-8


def test_ground_normalization_closed_form():
    spec = PotentialSpec(delta=0.05)
    q = QuantumNumbers(0, 2)
    sc, K = signed_sqrt_c(q, spec.alpha_sq), 3.0
    log_sq = (
        math.log(2 * sc * (K + sc))
        + log_gamma(2 * (K + sc))
        - math.log(1 / spec.delta)
        - math.log(K)
        - log_gamma(2 * sc + 1)
        - log_gamma(2 * K)
    )
    assert normalization_constant(spec, q) == pytest.approx(math.exp(0.5 * log_sq), rel=1e-13)


def test_norm_constant_scales_with_sqrt_delta():
    # same sqrt(c), K: scale delta and Z together so alpha^2 is fixed
    q = QuantumNumbers(1, 1)
    c1 = normalization_constant(PotentialSpec(delta=0.05, Z=1.0), q)
    c2 = normalization_constant(PotentialSpec(delta=0.2, Z=4.0), q)
    assert c2 / c1 == pytest.approx(2.0, rel=1e-13)
    assert c1 > 0
