"""Gaussian Wigner and P functions for one and two field modes.

Phase-space convention: a mode amplitude ``alpha`` is a complex number whose
real and imaginary parts are the two quadratures.  The vacuum Wigner function
is ``(2/pi) exp(-2|alpha|^2)``, i.e. each quadrature has variance 1/4.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

VACUUM_VARIANCE = 0.25
PURITY_TOL = 1e-9
THRESHOLD_TOL = 1e-12


class Kind(enum.Enum):
    PURE = "pure"
    MIXED = "mixed"
    INVALID = "invalid"


class TwoModeClass(enum.Enum):
    CLASSICAL = "classical"
    CLASSICAL_BOUNDARY = "classical_boundary"
    ENTANGLED = "entangled"
    NOT_REAL = "not_real"


def single_mode_class(A: float, B: float) -> Kind:
    """Classify a single-mode gaussian by the product ``A*B``.

    ``A*B == 4`` is a minimum-uncertainty (pure) state, ``A*B < 4`` carries
    excess noise (mixed) and ``A*B > 4`` squeezes both quadratures below the
    vacuum product, which no density operator can do.
    """
    if not (A > 0 and B > 0):
        raise ValueError(f"A and B must be positive, got A={A}, B={B}")
    product = A * B
    if abs(product - 4.0) <= PURITY_TOL:
        return Kind.PURE
    return Kind.MIXED if product < 4.0 else Kind.INVALID


@dataclass(frozen=True)
class SingleModeGaussian:
    """``W(alpha) = sqrt(AB)/pi * exp(-A (Re alpha - Re a)^2 - B (Im alpha - Im a)^2)``."""

    A: float
    B: float
    center: complex = 0j
    kind: Kind = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not (math.isfinite(self.center.real) and math.isfinite(self.center.imag)):
            raise ValueError("center must be finite")
        object.__setattr__(self, "kind", single_mode_class(self.A, self.B))

    @property
    def variances(self) -> tuple[float, float]:
        """Variances of (Re alpha, Im alpha)."""
        return 1.0 / (2.0 * self.A), 1.0 / (2.0 * self.B)

    def __call__(self, alpha):
        return gaussian_eval(self, alpha)


def gaussian_eval(state: SingleModeGaussian, point):
    """Evaluate a single-mode gaussian Wigner function; broadcasts over arrays."""
    z = np.asarray(point, dtype=complex)
    dr = z.real - state.center.real
    di = z.imag - state.center.imag
    value = math.sqrt(state.A * state.B) / math.pi * np.exp(-state.A * dr**2 - state.B * di**2)
    return float(value) if value.ndim == 0 else value


def vacuum() -> SingleModeGaussian:
    return SingleModeGaussian(2.0, 2.0, 0j)


def coherent(a: complex = 0j) -> SingleModeGaussian:
    """Coherent state centered at ``a``; ``a = 0`` is the vacuum."""
    return SingleModeGaussian(2.0, 2.0, a)


def squeezed(a: complex, s: float) -> SingleModeGaussian:
    """Squeezed state: the real quadrature is narrowed by ``exp(-2s)`` in variance."""
    if not math.isfinite(s):
        raise ValueError(f"squeeze parameter must be finite, got {s}")
    return SingleModeGaussian(2.0 * math.exp(2.0 * s), 2.0 * math.exp(-2.0 * s), a)


def chaotic(n: float) -> SingleModeGaussian:
    """Chaotic (thermal-like) light with ``n`` mean photons."""
    if not n >= 0:
        raise ValueError(f"mean photon number must be nonnegative, got {n}")
    coeff = 2.0 / (2.0 * n + 1.0)
    return SingleModeGaussian(coeff, coeff, 0j)


# --- P functions ---------------------------------------------------------


@dataclass(frozen=True)
class DeltaP:
    """Point-mass P function of a coherent state."""

    center: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))


@dataclass(frozen=True)
class ChaoticP:
    """``P(alpha) = exp(-|alpha|^2 / n) / (pi n)``; ``n = 0`` degenerates to a delta at 0."""

    n: float

    def __post_init__(self):
        if not self.n >= 0:
            raise ValueError(f"mean photon number must be nonnegative, got {self.n}")

    def __call__(self, alpha):
        if self.n == 0:
            raise ValueError("ChaoticP(0) is a point mass; it has no density")
        z = np.asarray(alpha, dtype=complex)
        return np.exp(-np.abs(z) ** 2 / self.n) / (math.pi * self.n)


@dataclass(frozen=True)
class TwoModeSignalP:
    """Two-mode gaussian P function with coefficients ``a``, ``b``, ``c``.

    ``P(alpha, beta) = (ab - c^2)/pi^2 exp(-a|alpha|^2 - b|beta|^2 + c(alpha beta* + beta alpha*))``
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"a and b must be positive, got a={self.a}, b={self.b}")
        if not self.c**2 < self.a * self.b:
            raise ValueError(f"c^2 < ab is required for normalizability (c={self.c})")

    def __call__(self, alpha, beta):
        al = np.asarray(alpha, dtype=complex)
        be = np.asarray(beta, dtype=complex)
        cross = 2.0 * (al * be.conjugate()).real
        expo = -self.a * np.abs(al) ** 2 - self.b * np.abs(be) ** 2 + self.c * cross
        return (self.a * self.b - self.c**2) / math.pi**2 * np.exp(expo)


# --- two-mode Wigner -----------------------------------------------------


@dataclass(frozen=True)
class TwoModeWigner:
    """Symmetric two-mode gaussian Wigner function parameterized by ``(n, x)``.

    ``n`` is the mean photon number per mode and ``x`` the cross-mode
    correlation.  With ``polarized=True`` both modes carry an x- and a
    y-polarization component and the two polarization blocks are independent
    copies of the scalar state.
    """

    n: float
    x: float
    polarized: bool = False

    def __post_init__(self):
        if not self.n >= 0:
            raise ValueError(f"mean photon number must be nonnegative, got {self.n}")
        if not abs(self.x) < 1:
            raise ValueError(f"|x| < 1 is required for a real state, got x={self.x}")

    @property
    def coeff_A(self) -> float:
        return 2.0 / ((2.0 * self.n + 1.0) * (1.0 - self.x**2))

    @property
    def quadrature_variance(self) -> float:
        return (2.0 * self.n + 1.0) / 4.0

    @property
    def arity(self) -> int:
        """Number of complex amplitudes per realization."""
        return 4 if self.polarized else 2

    def pair_covariance(self) -> np.ndarray:
        """Covariance of one correlated quadrature pair, e.g. (Re alpha, Re beta)."""
        v = self.quadrature_variance
        return v * np.array([[1.0, self.x], [self.x, 1.0]])

    def covariance(self) -> np.ndarray:
        """Covariance of the full real quadrature vector.

        Ordering is ``(Re, Im)`` per amplitude, amplitudes ordered
        ``(alpha, beta)`` or ``(alpha_x, alpha_y, beta_x, beta_y)``.
        """
        m = self.arity
        half = m // 2
        cov = np.zeros((2 * m, 2 * m))
        v = self.quadrature_variance
        for j in range(half):
            ia, ib = 2 * j, 2 * (j + half)
            for q in (0, 1):
                cov[ia + q, ia + q] = v
                cov[ib + q, ib + q] = v
                cov[ia + q, ib + q] = cov[ib + q, ia + q] = self.x * v
        return cov

    def normalization(self) -> float:
        """Prefactor that makes the density integrate to one.

        For one polarization block this is ``A^2 (1 - x^2) / pi^2``.
        """
        block = self.coeff_A**2 * (1.0 - self.x**2) / math.pi**2
        return block**2 if self.polarized else block

    def __call__(self, alpha, beta):
        """Density at ``(alpha, beta)``; for polarized states the trailing axis has length 2."""
        al = np.asarray(alpha, dtype=complex)
        be = np.asarray(beta, dtype=complex)
        quad = np.abs(al) ** 2 + np.abs(be) ** 2 - 2.0 * self.x * (al * be.conjugate()).real
        if self.polarized:
            if al.shape[-1:] != (2,) or be.shape[-1:] != (2,):
                raise ValueError("polarized amplitudes need a trailing axis of length 2")
            quad = quad.sum(axis=-1)
        value = self.normalization() * np.exp(-self.coeff_A * quad)
        return float(value) if np.ndim(value) == 0 else value


def two_mode_wigner(n: float, x: float, polarized: bool = False) -> TwoModeWigner:
    return TwoModeWigner(n, x, polarized)


# --- signal <-> (n, x) ---------------------------------------------------


def two_mode_signal(a: float, c: float) -> tuple[float, float]:
    """Mean photons per mode and correlation of the symmetric signal P(a, a, c)."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")
    if not c**2 < a**2:
        raise ValueError(f"c^2 < a^2 is required for normalizability (a={a}, c={c})")
    det = a * a - c * c
    return a / det, 2.0 * c / (2.0 * a + det)


def classical_bound(n: float) -> float:
    """Largest |x| a classical state with ``n`` photons per mode can reach."""
    return 2.0 * n / (2.0 * n + 1.0)


def signal_from_nx(n: float, x: float) -> tuple[float, float]:
    """Invert :func:`two_mode_signal` for a strictly classical ``(n, x)``."""
    if not n > 0:
        raise ValueError(f"n must be positive, got {n}")
    if not abs(x) < classical_bound(n) - THRESHOLD_TOL:
        raise ValueError(f"(n={n}, x={x}) is not strictly classical; no positive P exists")
    a = 4.0 * n / (4.0 * n * n - x * x * (2.0 * n + 1.0) ** 2)
    c = x * a * (2.0 * n + 1.0) / (2.0 * n)
    return a, c


def classify_two_mode(n: float, x: float) -> TwoModeClass:
    if not n >= 0:
        raise ValueError(f"mean photon number must be nonnegative, got {n}")
    ax = abs(x)
    if ax >= 1.0:
        return TwoModeClass.NOT_REAL
    bound = classical_bound(n)
    if abs(ax - bound) <= THRESHOLD_TOL:
        return TwoModeClass.CLASSICAL_BOUNDARY
    return TwoModeClass.CLASSICAL if ax < bound else TwoModeClass.ENTANGLED


def marginal_mode(state: TwoModeWigner) -> SingleModeGaussian:
    """Single-mode marginal; chaotic with the same ``n`` whatever ``x`` is."""
    return chaotic(state.n)


def convolve_vacuum(p):
    """Wigner function of a state given its (positive) P function.

    Convolving a gaussian with the vacuum adds 1/4 to every quadrature variance.
    """
    if isinstance(p, DeltaP):
        return coherent(p.center)
    if isinstance(p, ChaoticP):
        var = p.n / 2.0 + VACUUM_VARIANCE
        coeff = 1.0 / (2.0 * var)
        return SingleModeGaussian(coeff, coeff, 0j)
    if isinstance(p, TwoModeSignalP):
        if p.a != p.b:
            raise ValueError("only the symmetric case a == b maps onto the (n, x) family")
        n, x = two_mode_signal(p.a, p.c)
        return TwoModeWigner(n, x)
    raise TypeError(f"unsupported P function: {type(p).__name__}")
