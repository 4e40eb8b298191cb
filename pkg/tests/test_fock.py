import math

import numpy as np
import pytest

from stochoptics import detection as d
from stochoptics import fock
from stochoptics import gaussian as g


def test_ladder_commutator_truncation_artifact():
    ops = fock.LadderOps(6)
    comm = ops.create @ ops.annihilate - ops.annihilate @ ops.create
    diff = comm + np.eye(6)
    diff[5, 5] -= 6.0
    assert np.abs(diff).max() < 1e-14
    with pytest.raises(ValueError):
        fock.LadderOps(1)


def test_fock_state():
    psi = fock.fock_state(2, 5)
    assert np.array_equal(psi.coeffs, [0, 0, 1, 0, 0])
    with pytest.raises(fock.TruncationError):
        fock.fock_state(5, 5)


def test_coherent_zero_is_vacuum():
    assert np.array_equal(fock.coherent_state(0, 8).coeffs, fock.fock_state(0, 8).coeffs)


def test_coherent_series():
    psi = fock.coherent_state(0.5, 20)
    assert abs(np.vdot(psi.coeffs, psi.coeffs).real - 1) < 1e-10
    a = fock.LadderOps(20).annihilate
    assert np.vdot(psi.coeffs, a @ psi.coeffs) == pytest.approx(0.5, abs=1e-8)
    # phase of a complex amplitude carries through
    psi = fock.coherent_state(0.3j, 20)
    assert np.vdot(psi.coeffs, a @ psi.coeffs) == pytest.approx(0.3j, abs=1e-8)


def test_coherent_truncation_guard():
    with pytest.raises(fock.TruncationError):
        fock.coherent_state(3.0, 10)


def test_squeezed_vacuum_structure():
    psi = fock.squeezed_state(0, 0.5, 40)
    assert np.abs(psi.coeffs[1::2]).max() < 1e-14
    ops = fock.LadderOps(41)
    c = np.append(psi.coeffs, 0)
    xq = (ops.annihilate + ops.create) / 2
    pq = (ops.annihilate - ops.create) / 2j
    var_x = np.vdot(c, xq @ xq @ c).real - np.vdot(c, xq @ c).real ** 2
    var_p = np.vdot(c, pq @ pq @ c).real - np.vdot(c, pq @ c).real ** 2
    assert var_x == pytest.approx(math.exp(-1.0) / 4, abs=1e-6)
    assert var_p == pytest.approx(math.exp(1.0) / 4, abs=1e-6)


def test_squeezed_displaced_center():
    psi = fock.squeezed_state(0.4 - 0.2j, 0.2, 40)
    a = fock.LadderOps(40).annihilate
    assert np.vdot(psi.coeffs, a @ psi.coeffs) == pytest.approx(0.4 - 0.2j, abs=1e-8)


def test_squeezed_truncation_guard():
    with pytest.raises(fock.TruncationError):
        fock.squeezed_state(0, 1.5, 10)


def test_state_from_coeffs_normalizes():
    psi = fock.state_from_coeffs([1, 1j, 0])
    assert np.allclose(psi.coeffs, np.array([1, 1j, 0]) / math.sqrt(2))


def test_density_from_mixture():
    vac = fock.fock_state(0, 4)
    rho = fock.density_from_mixture([(vac, 1.0)])
    assert np.array_equal(rho.matrix, np.diag([1, 0, 0, 0]).astype(complex))
    mix = fock.density_from_mixture([(fock.fock_state(1, 4), 0.5), (vac, 0.5)])
    assert np.allclose(mix.matrix, np.diag([0.5, 0.5, 0, 0]))
    with pytest.raises(ValueError):
        fock.density_from_mixture([(fock.fock_state(1, 4), 0.6), (vac, 0.5)])
    with pytest.raises(ValueError):
        fock.density_from_mixture([(fock.fock_state(1, 4), 1.5), (vac, -0.5)])


def test_density_validation():
    with pytest.raises(ValueError):
        fock.DensityMatrix(np.array([[0.5, 0.1], [0.0, 0.5]]))
    with pytest.raises(ValueError):
        fock.DensityMatrix(np.diag([1.2, -0.2]))


# --- characteristic function -------------------------------------------------------


def test_char_function_origin():
    rho = fock.density_from_p(g.ChaoticP(0.7), 25)
    assert fock.char_function(rho, 0) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("xi", [0.5, 1.2 - 0.7j, 3.0j, 4.5 + 4.5j])
def test_char_function_vacuum_and_one_photon(xi):
    r2 = abs(xi) ** 2
    vac = fock.fock_state(0, 16).density()
    one = fock.fock_state(1, 16).density()
    assert fock.char_function(vac, xi) == pytest.approx(math.exp(-r2 / 2), abs=1e-12)
    assert fock.char_function(one, xi) == pytest.approx((1 - r2) * math.exp(-r2 / 2), abs=1e-12)


def test_spectral_route_matches_expm():
    rho = fock.squeezed_state(0.3 + 0.1j, 0.3, 30).density()
    xis = np.array([0.2, -1.1 + 0.4j, 2.5j, 5.0 - 3.0j, -6 - 6j])
    fast = fock.char_function_grid(rho, xis, op_dim=120)
    for xi, value in zip(xis, fast):
        assert value == pytest.approx(fock.char_function(rho, xi, op_dim=120), abs=1e-12)


# --- Wigner transform ----------------------------------------------------------------


def test_vacuum_wigner_value():
    rho = fock.fock_state(0, 8).density()
    assert fock.wigner_from_density(rho, 0.3) == pytest.approx(2 / math.pi * math.exp(-0.18), abs=1e-6)


def test_one_photon_negative_at_origin():
    rho = fock.fock_state(1, 8).density()
    value = fock.wigner_from_density(rho, 0)
    assert value < 0
    assert value == pytest.approx(-2 / math.pi, abs=1e-6)


def test_mixture_wigner_is_positive(test_grid):
    mix = fock.density_from_mixture([(fock.fock_state(1, 8), 0.5), (fock.fock_state(0, 8), 0.5)])
    w = fock.wigner_from_density(mix, test_grid)
    expected = 2 * np.abs(test_grid) ** 2 * g.vacuum()(test_grid)
    assert np.abs(w - expected).max() < 1e-6
    assert (w > -1e-9).all()


@pytest.mark.parametrize("rho_fn,state", [
    (lambda: fock.fock_state(0, 8).density(), g.vacuum()),
    (lambda: fock.coherent_state(0.5, 20).density(), g.coherent(0.5)),
    (lambda: fock.squeezed_state(0, 0.3, 40).density(), g.squeezed(0, 0.3)),
    (lambda: fock.density_from_p(g.ChaoticP(0.5), 30), g.chaotic(0.5)),
])
def test_oracle_matches_gaussian(rho_fn, state, test_grid):
    rho = rho_fn()
    w = fock.wigner_from_density(rho, test_grid)
    assert np.abs(w - g.gaussian_eval(state, test_grid)).max() < 1e-5
    sym, purity = fock.operator_moments(rho)
    assert sym == pytest.approx(d.mean_rate(state), abs=1e-6)


def test_wigner_residue_guard():
    # chi(-xi) = conj(chi(xi)) on the symmetric grid, so only roundoff survives
    rho = fock.coherent_state(0.5 + 0.5j, 20).density()
    fock.wigner_from_density(rho, 1.7 + 1.3j, residue_tol=1e-14)
    with pytest.raises(ValueError, match="imaginary residue"):
        fock.wigner_from_density(rho, 1.7 + 1.3j, residue_tol=0.0)


def test_grid_validation():
    with pytest.raises(ValueError):
        fock.QuadratureGrid(extent=4)
    with pytest.raises(ValueError):
        fock.QuadratureGrid(steps=201)


@pytest.mark.parametrize("make", [
    lambda D: fock.coherent_state(0.5, D).density(),
    lambda D: fock.density_from_p(g.ChaoticP(0.5), D),
])
def test_truncation_stability(make):
    alphas = np.array([0, 0.7 - 0.3j, 1.5j])
    small, large = make(20), make(40)
    w_small = fock.wigner_from_density(small, alphas)
    w_large = fock.wigner_from_density(large, alphas)
    assert np.abs(w_small - w_large).max() < 1e-6
    for a, b in zip(fock.operator_moments(small), fock.operator_moments(large)):
        assert a == pytest.approx(b, abs=1e-6)


# --- moments and P reconstruction -----------------------------------------------------


def test_operator_moments_examples():
    assert fock.operator_moments(fock.fock_state(0, 6).density()) == pytest.approx((0.0, 1.0))
    assert fock.operator_moments(fock.fock_state(1, 6).density()) == pytest.approx((1.0, 1.0))
    sym, purity = fock.operator_moments(fock.density_from_p(g.ChaoticP(1.0), 30))
    assert sym == pytest.approx(1.0, abs=1e-6)
    assert purity == pytest.approx(1 / 3, abs=1e-3)


@pytest.mark.parametrize("n", [0.1, 0.5, 1.0, 3.0])
def test_chaotic_density_is_geometric(n):
    D = 40 if n < 3 else 120
    rho = fock.density_from_p(g.ChaoticP(n), D)
    off = rho.matrix - np.diag(np.diag(rho.matrix))
    assert np.abs(off).max() == 0
    k = np.arange(D)
    np.testing.assert_allclose(np.diag(rho.matrix).real, n**k / (n + 1) ** (k + 1), atol=1e-9)
    assert fock.operator_moments(rho)[1] < 1 - 1e-6


@pytest.mark.parametrize("make", [
    lambda: fock.fock_state(0, 10).density(),
    lambda: fock.coherent_state(0.8 - 0.1j, 25).density(),
    lambda: fock.squeezed_state(0.2, -0.4, 40).density(),
])
def test_pure_states_have_unit_purity(make):
    assert fock.operator_moments(make())[1] == pytest.approx(1.0, abs=1e-8)


def test_density_from_p_degenerate_cases():
    rho = fock.density_from_p(g.DeltaP(0.5), 20)
    psi = fock.coherent_state(0.5, 20).coeffs
    assert np.allclose(rho.matrix, np.outer(psi, psi.conj()))
    assert np.array_equal(fock.density_from_p(g.ChaoticP(0), 5).matrix, fock.fock_state(0, 5).density().matrix)


def test_density_from_p_trace_guard():
    with pytest.raises(fock.TruncationError):
        fock.density_from_p(g.ChaoticP(5.0), 10)
