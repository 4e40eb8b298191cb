"""Truncated single-mode Fock space: the independent check on the gaussian formulas.

States and density matrices live in a ``D``-dimensional truncation.  The
displacement operator is evaluated in a larger operator space (``op_dim``),
because a ``D x D`` truncation of ``exp(xi a^dag - xi* a)`` is only accurate
while ``|xi|^2`` is small compared with ``D``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import expm
from scipy.special import gammaln

from .gaussian import ChaoticP, DeltaP

TRUNCATION_BUDGET = 1e-8


class TruncationError(ValueError):
    """The requested state does not fit in the truncated space."""


@dataclass(frozen=True)
class LadderOps:
    dim: int

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")

    @property
    def annihilate(self) -> np.ndarray:
        return np.diag(np.sqrt(np.arange(1, self.dim)), 1).astype(complex)

    @property
    def create(self) -> np.ndarray:
        return self.annihilate.conj().T


@dataclass(frozen=True)
class PureStateVec:
    coeffs: np.ndarray
    truncation_loss: float = 0.0

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1:
            raise ValueError("coefficients must be a vector")
        if abs(np.vdot(c, c).real - 1.0) > 1e-8:
            raise ValueError("state vector is not normalized")
        object.__setattr__(self, "coeffs", c)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    def density(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.coeffs, self.coeffs.conj()))


@dataclass(frozen=True)
class DensityMatrix:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if np.abs(m - m.conj().T).max() > 1e-10:
            raise ValueError("density matrix is not hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-8:
            raise ValueError(f"trace is {np.trace(m).real}, expected 1")
        if np.linalg.eigvalsh(m).min() < -1e-10:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class QuadratureGrid:
    """Square ``[-extent, extent]^2`` in the xi plane with ``steps`` intervals per axis."""

    extent: float = 6.0
    steps: int = 200

    def __post_init__(self):
        if self.extent < 5:
            raise ValueError(f"extent must be at least 5, got {self.extent}")
        if self.steps < 2 or self.steps % 2:
            raise ValueError(f"steps must be even and positive, got {self.steps}")

    def nodes(self) -> np.ndarray:
        return np.linspace(-self.extent, self.extent, self.steps + 1)

    def weights(self) -> np.ndarray:
        h = 2.0 * self.extent / self.steps
        w = np.full(self.steps + 1, h)
        w[0] = w[-1] = h / 2.0
        return w


def default_op_dim(dim: int, max_abs_xi: float) -> int:
    return dim + math.ceil(max_abs_xi**2) + 8


# --- state construction ----------------------------------------------------


def fock_state(m: int, dim: int) -> PureStateVec:
    if not 0 <= m < dim:
        raise TruncationError(f"Fock level {m} does not fit in dimension {dim}")
    c = np.zeros(dim, dtype=complex)
    c[m] = 1.0
    return PureStateVec(c)


def _finish(c: np.ndarray, total: float) -> PureStateVec:
    kept = float(np.vdot(c, c).real)
    loss = max(total - kept, 0.0)
    if loss > TRUNCATION_BUDGET:
        raise TruncationError(f"truncation loses {loss:.3e} of the norm; raise the dimension")
    return PureStateVec(c / math.sqrt(kept), loss)


def coherent_state(a: complex, dim: int) -> PureStateVec:
    """Coefficients ``a^n exp(-|a|^2/2) / sqrt(n!)``."""
    a = complex(a)
    k = np.arange(dim)
    if a == 0:
        return fock_state(0, dim)
    log_mag = k * math.log(abs(a)) - abs(a) ** 2 / 2.0 - 0.5 * gammaln(k + 1)
    c = np.exp(log_mag) * np.exp(1j * k * np.angle(a))
    return _finish(c, 1.0)


def squeezed_state(a: complex, s: float, dim: int) -> PureStateVec:
    """Squeezed vacuum displaced to ``a``; real-quadrature variance ``exp(-2s)/4``.

    Built as ``D(a) exp((s/2)(a^2 - a^dag^2)) |0>`` in an enlarged space, then
    truncated to ``dim``.
    """
    work = 2 * dim + 20
    ops = LadderOps(work)
    a_op, ad = ops.annihilate, ops.create
    vac = np.zeros(work, dtype=complex)
    vac[0] = 1.0
    psi = expm(0.5 * s * (a_op @ a_op - ad @ ad)) @ vac
    a = complex(a)
    if a != 0:
        psi = expm(a * ad - a.conjugate() * a_op) @ psi
    return _finish(psi[:dim].copy(), float(np.vdot(psi, psi).real))


def state_from_coeffs(coeffs) -> PureStateVec:
    c = np.asarray(coeffs, dtype=complex)
    norm = math.sqrt(np.vdot(c, c).real)
    if norm == 0:
        raise ValueError("all coefficients are zero")
    return PureStateVec(c / norm)


def density_from_mixture(components) -> DensityMatrix:
    """``rho = sum_k w_k |psi_k><psi_k|`` for pairs ``(psi_k, w_k)``."""
    components = list(components)
    weights = np.array([w for _, w in components], dtype=float)
    if (weights < 0).any():
        raise ValueError("mixture weights must be nonnegative")
    if abs(weights.sum() - 1.0) > 1e-10:
        raise ValueError(f"mixture weights sum to {weights.sum()}, expected 1")
    dims = {psi.dim for psi, _ in components}
    if len(dims) != 1:
        raise ValueError("all components must share one dimension")
    rho = sum(w * np.outer(psi.coeffs, psi.coeffs.conj()) for psi, w in components)
    return DensityMatrix(rho)


def density_from_p(p, dim: int, radial_points: int = 4001) -> DensityMatrix:
    """``rho = int P(a) |a><a| d^2a`` for the single-mode gaussian P functions.

    For a rotation-invariant P the angular integral removes every off-diagonal
    element and ``rho_kk = int_0^inf P(r) exp(-r^2) r^(2k) / k! 2 pi r dr``,
    evaluated with Simpson's rule on a uniform radial grid.
    """
    if isinstance(p, DeltaP):
        return coherent_state(p.center, dim).density()
    if not isinstance(p, ChaoticP):
        raise TypeError(f"unsupported P function: {type(p).__name__}")
    if p.n == 0:
        return fock_state(0, dim).density()
    # P(r) exp(-r^2) decays like exp(-r^2 (1 + 1/n)); the r^(2k) factor peaks near sqrt(k).
    r_max = math.sqrt(dim) + math.sqrt(40.0 / (1.0 + 1.0 / p.n)) + 2.0
    r = np.linspace(0.0, r_max, radial_points)
    k = np.arange(dim)[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        log_r2k = np.where(r > 0, 2 * k * np.log(r), np.where(k == 0, 0.0, -np.inf))
    log_poly = log_r2k - gammaln(k + 1)
    integrand = np.exp(log_poly - r**2) * p(r) * 2 * math.pi * r
    diag = simpson(integrand, x=r, axis=1)
    deficit = 1.0 - diag.sum()
    if abs(deficit) > 1e-6:
        raise TruncationError(f"trace deficit {deficit:.3e}; raise the dimension or grid")
    return DensityMatrix(np.diag(diag / diag.sum()))


# --- phase-space transforms ------------------------------------------------------


def _padded(rho: DensityMatrix, op_dim: int) -> np.ndarray:
    if op_dim < rho.dim:
        raise ValueError("op_dim must be at least the state dimension")
    big = np.zeros((op_dim, op_dim), dtype=complex)
    big[:rho.dim, :rho.dim] = rho.matrix
    return big


def char_function(rho: DensityMatrix, xi: complex, op_dim: int | None = None) -> complex:
    """``Tr[rho exp(xi a^dag - xi* a)]`` by dense matrix exponential."""
    xi = complex(xi)
    if op_dim is None:
        op_dim = default_op_dim(rho.dim, abs(xi))
    ops = LadderOps(op_dim)
    disp = expm(xi * ops.create - xi.conjugate() * ops.annihilate)
    return complex(np.trace(_padded(rho, op_dim) @ disp))


@lru_cache(maxsize=8)
def _momentum_eigen(op_dim: int):
    # a^dag - a = i H with H hermitian, so exp(r (a^dag - a)) = V diag(exp(i r lam)) V^dag
    ops = LadderOps(op_dim)
    return np.linalg.eigh(-1j * (ops.create - ops.annihilate))


def char_function_grid(rho: DensityMatrix, xi: np.ndarray, op_dim: int | None = None,
                       chunk: int = 4096) -> np.ndarray:
    """Characteristic function at many points, via one eigendecomposition.

    Writing ``xi = r exp(i theta)``, the displacement factors exactly (also in
    the truncated space) as ``R(theta) exp(r (a^dag - a)) R(theta)^dag`` with
    ``R(theta) = diag(exp(i k theta))``.
    """
    xi = np.asarray(xi, dtype=complex).ravel()
    if op_dim is None:
        op_dim = default_op_dim(rho.dim, float(np.abs(xi).max(initial=0.0)))
    lam, V = _momentum_eigen(op_dim)
    Vd = V[:rho.dim, :].conj()
    p, U = np.linalg.eigh(rho.matrix)
    keep = p > 1e-15
    p, U = p[keep], U[:, keep]
    levels = np.arange(rho.dim)
    out = np.zeros(xi.size, dtype=complex)
    for start in range(0, xi.size, chunk):
        z = xi[start:start + chunk]
        rot = np.exp(-1j * np.outer(np.angle(z), levels))
        spectral = np.exp(1j * np.outer(np.abs(z), lam))
        for weight, u in zip(p, U.T):
            proj = (rot * u) @ Vd
            out[start:start + chunk] += weight * np.sum(np.abs(proj) ** 2 * spectral, axis=1)
    return out


def wigner_from_density(rho: DensityMatrix, alpha, grid: QuadratureGrid = QuadratureGrid(),
                        op_dim: int | None = None, residue_tol: float = 1e-8):
    """Wigner function at ``alpha`` (scalar or array) by xi-plane quadrature.

    ``W(alpha) = pi^-2 int chi(xi) exp(xi* alpha - xi alpha*) d^2 xi``.
    """
    alpha = np.asarray(alpha, dtype=complex)
    g = grid.nodes()
    xr, xi_im = np.meshgrid(g, g, indexing="ij")
    xi = (xr + 1j * xi_im).ravel()
    w2 = np.outer(grid.weights(), grid.weights()).ravel()
    if op_dim is None:
        op_dim = default_op_dim(rho.dim, grid.extent * math.sqrt(2.0))
    chi_w = char_function_grid(rho, xi, op_dim) * w2
    flat = alpha.ravel()
    values = np.empty(flat.size, dtype=complex)
    for i, a in enumerate(flat):
        values[i] = chi_w @ np.exp(xi.conjugate() * a - xi * a.conjugate())
    values /= math.pi**2
    residue = float(np.abs(values.imag).max())
    if residue > residue_tol:
        raise ValueError(f"imaginary residue {residue:.2e} exceeds {residue_tol:.0e}")
    real = values.real.reshape(alpha.shape)
    return float(real) if real.ndim == 0 else real


def operator_moments(rho: DensityMatrix) -> tuple[float, float]:
    """Symmetrized photon number ``Tr[rho (a^dag a + a a^dag - 1)]/2`` and purity ``Tr[rho^2]``."""
    # one extra level so a a^dag carries no truncation artifact on the support of rho
    ops = LadderOps(rho.dim + 1)
    a, ad = ops.annihilate, ops.create
    big = _padded(rho, rho.dim + 1)
    sym = 0.5 * np.trace(big @ (ad @ a + a @ ad - np.eye(rho.dim + 1))).real
    purity = np.trace(rho.matrix @ rho.matrix).real
    return float(sym), float(purity)
