import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from stochoptics import gaussian as g


def quad2d(f, half_width, points=801):
    axis = np.linspace(-half_width, half_width, points)
    re, im = np.meshgrid(axis, axis, indexing="ij")
    h = axis[1] - axis[0]
    w = np.full(points, h)
    w[0] = w[-1] = h / 2
    return float(w @ f(re + 1j * im) @ w)


# --- evaluation and constructors ------------------------------------------------


def test_vacuum_peak():
    assert g.gaussian_eval(g.vacuum(), 0j) == pytest.approx(2 / math.pi, rel=1e-15)


def test_chaotic_peak():
    assert g.gaussian_eval(g.chaotic(1.0), 0j) == pytest.approx(2 / (3 * math.pi), rel=1e-15)


def test_squeezed_value():
    # direct evaluation: (2/pi) exp(-2 e^{2s} 0.09) with s = 0.5
    expected = 2 / math.pi * math.exp(-2 * math.e * 0.09)
    assert g.gaussian_eval(g.squeezed(0, 0.5), 0.3) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(0.3903, abs=1e-4)


def test_eval_broadcasts():
    pts = np.array([[0, 0.1j], [0.5, -1 + 1j]])
    out = g.gaussian_eval(g.coherent(0.2), pts)
    assert out.shape == (2, 2)
    assert out[0, 0] == pytest.approx(2 / math.pi * math.exp(-2 * 0.04))


def test_canonical_constructors():
    coh = g.coherent(0)
    assert (coh.A, coh.B, coh.center, coh.kind) == (2.0, 2.0, 0j, g.Kind.PURE)
    sq = g.squeezed(0, 0.5)
    assert sq.A == pytest.approx(2 * math.e)
    assert sq.B == pytest.approx(2 / math.e)
    assert sq.A * sq.B == pytest.approx(4.0, abs=1e-12)
    assert sq.kind is g.Kind.PURE
    ch = g.chaotic(1.0)
    assert ch.A == ch.B == pytest.approx(2 / 3)
    assert ch.kind is g.Kind.MIXED
    assert g.chaotic(0.0).kind is g.Kind.PURE


def test_negative_photon_number_rejected():
    with pytest.raises(ValueError):
        g.chaotic(-0.1)


def test_single_mode_class():
    assert g.single_mode_class(2, 2) is g.Kind.PURE
    assert g.single_mode_class(2 / 3, 2 / 3) is g.Kind.MIXED
    assert g.single_mode_class(3, 3) is g.Kind.INVALID
    with pytest.raises(ValueError):
        g.single_mode_class(0, 2)
    with pytest.raises(ValueError):
        g.single_mode_class(2, -1)


def test_invalid_means_sub_vacuum_noise():
    # A = B = 3 gives variances 1/6 each, product 1/36 < 1/16
    vr, vi = g.SingleModeGaussian(3, 3).variances
    assert vr * vi < 1 / 16


@pytest.mark.parametrize("state", [
    g.vacuum(), g.coherent(0.7 - 0.2j), g.squeezed(0.3j, 0.4), g.squeezed(0, -0.8),
    g.chaotic(0.5), g.chaotic(3.0), g.SingleModeGaussian(3.0, 0.5, 1.0),
])
def test_normalization(state):
    vr, vi = state.variances
    half = 8 * math.sqrt(max(vr, vi))
    shifted = lambda z: g.gaussian_eval(state, z + state.center)
    assert quad2d(shifted, half) == pytest.approx(1.0, abs=1e-6)


# --- convolution with the vacuum -----------------------------------------------


def test_convolve_delta_is_coherent():
    assert g.convolve_vacuum(g.DeltaP(0.4 + 0.1j)) == g.coherent(0.4 + 0.1j)


@pytest.mark.parametrize("n", [0.0, 0.3, 1.0, 4.0])
def test_convolve_chaotic_variance(n):
    w = g.convolve_vacuum(g.ChaoticP(n))
    assert w.variances == ((2 * n + 1) / 4, (2 * n + 1) / 4)
    assert w.A == pytest.approx(g.chaotic(n).A, rel=1e-15)


@pytest.mark.parametrize("n", [0.5, 1.0, 2.0])
def test_grid_convolution_matches_chaotic_wigner(n):
    p = g.ChaoticP(n)
    vac = g.vacuum()
    for alpha in (0j, 0.5, -0.3 + 0.8j, 1.5 - 1j):
        value = quad2d(lambda b: p(b) * vac(alpha - b), 10.0, points=1001)
        assert value == pytest.approx(g.chaotic(n)(alpha), abs=1e-8)


def test_convolve_two_mode_signal():
    w = g.convolve_vacuum(g.TwoModeSignalP(2, 2, 1))
    assert w.n == pytest.approx(2 / 3)
    assert w.x == pytest.approx(2 / 7)


def test_convolve_asymmetric_rejected():
    with pytest.raises(ValueError):
        g.convolve_vacuum(g.TwoModeSignalP(1, 2, 0.5))


def test_signal_p_invariants():
    with pytest.raises(ValueError):
        g.TwoModeSignalP(1, 1, 1.5)
    with pytest.raises(ValueError):
        g.TwoModeSignalP(-1, 1, 0)


# --- two-mode parameterization ----------------------------------------------------


def test_two_mode_signal_examples():
    assert g.two_mode_signal(1, 0) == (1.0, 0.0)
    n, x = g.two_mode_signal(2, 1)
    assert n == pytest.approx(2 / 3, rel=1e-15)
    assert x == pytest.approx(2 / 7, rel=1e-15)
    with pytest.raises(ValueError):
        g.two_mode_signal(1, 1.5)


def test_signal_from_nx_examples():
    a, c = g.signal_from_nx(2 / 3, 2 / 7)
    assert a == pytest.approx(2.0, rel=1e-12)
    assert c == pytest.approx(1.0, rel=1e-12)
    assert g.signal_from_nx(1, 0) == (1.0, 0.0)
    with pytest.raises(ValueError):
        g.signal_from_nx(1, 2 / 3)
    with pytest.raises(ValueError):
        g.signal_from_nx(1, 0.9)


classical_nx = st.floats(0.01, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.floats(-0.999, 0.999).map(lambda f: f * g.classical_bound(n))))


@given(classical_nx)
def test_round_trip(nx):
    n, x = nx
    back_n, back_x = g.two_mode_signal(*g.signal_from_nx(n, x))
    assert back_n == pytest.approx(n, abs=1e-10, rel=1e-10)
    assert back_x == pytest.approx(x, abs=1e-10)


@given(st.floats(0.05, 50), st.floats(-1, 1))
def test_signal_is_never_entangled(a, frac):
    c = 0.999 * frac * a
    n, x = g.two_mode_signal(a, c)
    assert g.classify_two_mode(n, x) in (g.TwoModeClass.CLASSICAL, g.TwoModeClass.CLASSICAL_BOUNDARY)
    w = g.convolve_vacuum(g.TwoModeSignalP(a, a, c))
    assert g.classify_two_mode(w.n, w.x) is not g.TwoModeClass.ENTANGLED


def test_two_mode_wigner_coefficients():
    assert g.two_mode_wigner(0, 0).coeff_A == 2.0
    assert g.two_mode_wigner(1, 0).coeff_A == pytest.approx(2 / 3)
    assert g.two_mode_wigner(0.5, 0.5).coeff_A == pytest.approx(4 / 3)
    with pytest.raises(ValueError):
        g.two_mode_wigner(0.2, 1.0)


def test_two_mode_vacuum_is_product():
    w = g.two_mode_wigner(0, 0)
    vac = g.vacuum()
    for al, be in [(0, 0), (0.3 + 0.1j, -0.5j), (1, 1)]:
        assert w(al, be) == pytest.approx(vac(al) * vac(be), rel=1e-14)


@pytest.mark.parametrize("n,x", [(0.0, 0.0), (0.5, 0.5), (1.0, -0.3), (0.2, 0.8)])
def test_two_mode_normalization_by_quadrature(n, x):
    w = g.two_mode_wigner(n, x)
    sigma = math.sqrt(w.quadrature_variance)
    axis = np.linspace(-8 * sigma, 8 * sigma, 49)
    h = axis[1] - axis[0]
    ra, ia, rb, ib = np.meshgrid(axis, axis, axis, axis, indexing="ij")
    total = w(ra + 1j * ia, rb + 1j * ib).sum() * h**4
    assert total == pytest.approx(1.0, abs=1e-6)
    assert w.normalization() == pytest.approx(w.coeff_A**2 * (1 - x**2) / math.pi**2)


def test_polarized_is_product_of_blocks():
    s = g.two_mode_wigner(0.4, 0.6)
    p = g.two_mode_wigner(0.4, 0.6, polarized=True)
    al = np.array([0.2 + 0.1j, -0.3j])
    be = np.array([0.5, 0.1 - 0.2j])
    assert p(al, be) == pytest.approx(s(al[0], be[0]) * s(al[1], be[1]), rel=1e-13)


# --- classification ---------------------------------------------------------------


@pytest.mark.parametrize("n,x,tag", [
    (1, 0.5, g.TwoModeClass.CLASSICAL),
    (1, 0.8, g.TwoModeClass.ENTANGLED),
    (0, 0.5, g.TwoModeClass.ENTANGLED),
    (0.2, 1.1, g.TwoModeClass.NOT_REAL),
    (1, -0.8, g.TwoModeClass.ENTANGLED),
    (1, 2 / 3, g.TwoModeClass.CLASSICAL_BOUNDARY),
    (0, 0, g.TwoModeClass.CLASSICAL_BOUNDARY),
])
def test_classify_examples(n, x, tag):
    assert g.classify_two_mode(n, x) is tag


def test_classify_rejects_negative_n():
    with pytest.raises(ValueError):
        g.classify_two_mode(-1, 0.2)


@given(st.floats(0, 1e3), st.floats(1e-6, 1e3))
def test_bound_monotone(n, dn):
    assert g.classical_bound(n) < g.classical_bound(n + dn) < 1


def test_marginal():
    assert g.marginal_mode(g.two_mode_wigner(1, 0.9)) == g.chaotic(1)
    assert g.marginal_mode(g.two_mode_wigner(0, 0.5)) == g.vacuum()


@pytest.mark.parametrize("n,x", [(0.3, 0.7), (1.0, 0.0), (2.0, -0.9)])
def test_marginal_matches_integral(n, x):
    w = g.two_mode_wigner(n, x)
    sigma = math.sqrt(w.quadrature_variance)
    alpha = 0.4 - 0.2j
    value = quad2d(lambda b: w(alpha, b), 9 * sigma, points=401)
    assert value == pytest.approx(g.marginal_mode(w)(alpha), abs=1e-9)
