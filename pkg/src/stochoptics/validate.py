"""Cross-checks of the closed forms against the Fock oracle and Monte Carlo."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import detection, fock, gaussian
from ._io import fmt

HEADER = "check_name,expected,actual,tolerance,pass"


@dataclass(frozen=True)
class Check:
    name: str
    expected: float
    actual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(abs(self.actual - self.expected) <= self.tolerance)

    def csv_row(self) -> str:
        return ",".join([self.name, fmt(self.expected), fmt(self.actual), fmt(self.tolerance),
                         "true" if self.passed else "false"])


def wick_coincidence(state: gaussian.TwoModeWigner, phi1: float, phi2: float) -> float:
    """``<(|lambda|^2 - 1/2)(|mu|^2 - 1/2)>`` by Isserlis pairing on the covariance.

    Uses only the full quadrature covariance of the polarized state, so it is
    independent of the closed-form coincidence expression.
    """
    cov = state.covariance()
    # rows: Re lambda, Im lambda, Re mu, Im mu in terms of the 8 quadratures
    P = np.zeros((4, 8))
    c1, s1, c2, s2 = math.cos(phi1), math.sin(phi1), math.cos(phi2), math.sin(phi2)
    for q in (0, 1):
        P[q, q], P[q, 2 + q] = c1, s1
        P[2 + q, 4 + q], P[2 + q, 6 + q] = c2, s2
    S = P @ cov @ P.T
    lam, mu = (0, 1), (2, 3)
    total = 0.0
    for i in lam:
        for j in mu:
            # E[u^2 v^2] = S_uu S_vv + 2 S_uv^2 for zero-mean gaussians
            total += S[i, i] * S[j, j] + 2.0 * S[i, j] ** 2
    total -= 0.5 * (S[0, 0] + S[1, 1]) + 0.5 * (S[2, 2] + S[3, 3]) - 0.25
    return float(total)


TEST_GRID = (np.linspace(-2, 2, 9)[:, None] + 1j * np.linspace(-2, 2, 9)[None, :])


def oracle_cases():
    """(name, density matrix, closed-form Wigner) for the phase-space comparisons."""
    w0 = gaussian.vacuum()
    mixture = fock.density_from_mixture([(fock.fock_state(1, 8), 0.5), (fock.fock_state(0, 8), 0.5)])
    return [
        ("vacuum", fock.fock_state(0, 8).density(), w0),
        ("fock1", fock.fock_state(1, 8).density(), lambda z: (4 * np.abs(z) ** 2 - 1) * w0(z)),
        ("fock_mixture", mixture, lambda z: 2 * np.abs(z) ** 2 * w0(z)),
        ("coherent_0.5", fock.coherent_state(0.5, 20).density(), gaussian.coherent(0.5)),
        ("squeezed_0.3", fock.squeezed_state(0, 0.3, 40).density(), gaussian.squeezed(0, 0.3)),
        ("chaotic_0.5", fock.density_from_p(gaussian.ChaoticP(0.5), 30), gaussian.chaotic(0.5)),
    ]


def run_suite(count: int = 200_000, seed: int = 0, threads: int = 1) -> list[Check]:
    checks: list[Check] = []
    add = checks.append

    exact_n = 0.5 / (math.sqrt(2 * (1 / math.sqrt(2)) / (1 - 1 / math.sqrt(2))) - 1)
    add(Check("critical_n_v0.7071", exact_n, detection.critical_n(1 / math.sqrt(2)), 5e-3))

    for n in (0.1, 0.5, 1.0, 5.0):
        vis = detection.coincidence_closed(n, gaussian.classical_bound(n), 0.0).visibility
        add(Check(f"boundary_visibility_n{n:g}", 1 / 3, vis, 1e-12))

    pol = gaussian.TwoModeWigner(0.3, 0.8, polarized=True)
    for k, dphi in enumerate((0.0, math.pi / 8, math.pi / 4, math.pi / 2)):
        closed = detection.coincidence_closed(0.3, 0.8, dphi).r12
        add(Check(f"r12_wick_dphi{k}", closed, wick_coincidence(pol, dphi, 0.0), 1e-12))
        settings = (detection.PolarizerSetting(dphi), detection.PolarizerSetting(0.0))
        est = detection.coincidence_mc(pol, settings, count, seed + k, threads=threads)
        add(Check(f"r12_mc_dphi{k}", closed, est.mean, 3 * est.std_error))

    for name, rho, closed in oracle_cases():
        oracle = fock.wigner_from_density(rho, TEST_GRID)
        dev = float(np.abs(oracle - closed(TEST_GRID)).max())
        add(Check(f"wigner_{name}_maxdev", 0.0, dev, 1e-5))
    add(Check("fock1_origin", -2 / math.pi,
              fock.wigner_from_density(fock.fock_state(1, 8).density(), 0j), 1e-6))

    sym, purity = fock.operator_moments(fock.density_from_p(gaussian.ChaoticP(1.0), 30))
    add(Check("chaotic1_purity", 1 / 3, purity, 1e-3))
    add(Check("chaotic1_AB", 4 / 9, gaussian.chaotic(1.0).A * gaussian.chaotic(1.0).B, 1e-12))
    add(Check("chaotic1_sym_number", 1.0, sym, 1e-6))

    for n in (0.0, 0.5, 1.0, 2.0):
        add(Check(f"mean_rate_chaotic{n:g}", n, detection.mean_rate(gaussian.chaotic(n)), 0.0))
        var = gaussian.convolve_vacuum(gaussian.ChaoticP(n)).variances[0]
        add(Check(f"convolution_variance_n{n:g}", (2 * n + 1) / 4, var, 1e-15))

    for n, x in ((0.5, 0.3), (2.0, -0.7), (0.05, 0.08)):
        back = gaussian.two_mode_signal(*gaussian.signal_from_nx(n, x))
        add(Check(f"roundtrip_n{n:g}_x{x:g}", 0.0, max(abs(back[0] - n), abs(back[1] - x)), 1e-10))
    return checks


def report(checks) -> str:
    return "\n".join([HEADER] + [c.csv_row() for c in checks]) + "\n"
