"""Zeropoint-subtracting photodetection and polarization coincidences.

Detectors register ``|alpha|^2 - 1/2`` per mode (the vacuum contribution
removed), so individual realizations may give negative values.  Rates are in
arbitrary units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .gaussian import SingleModeGaussian, TwoModeWigner, vacuum
from .sampling import (
    DEFAULT_CHUNK,
    SampleBatch,
    arity_of,
    quadrature_factor,
    sample_quadratures,
    sample_two_mode,
)


class UnattainableVisibility(ValueError):
    """Requested visibility is not reachable at any positive intensity."""


@dataclass(frozen=True)
class Units:
    hbar: float = 1.0
    c: float = 1.0
    eps0: float = 1.0
    L: float = 1.0


NATURAL = Units()


@dataclass(frozen=True)
class RateEstimate:
    mean: float
    std_error: float
    count: int

    @classmethod
    def from_values(cls, values: np.ndarray) -> "RateEstimate":
        values = np.asarray(values, dtype=float)
        count = values.size
        if count < 2:
            raise ValueError(f"need at least 2 draws for a standard error, got {count}")
        return cls(float(values.mean()), float(values.std(ddof=1) / math.sqrt(count)), count)

    def as_dict(self) -> dict:
        return {"mean": self.mean, "std_error": self.std_error, "count": self.count}


@dataclass(frozen=True)
class PolarizerSetting:
    angle: float

    @property
    def axis(self) -> np.ndarray:
        return np.array([math.cos(self.angle), math.sin(self.angle)])


@dataclass(frozen=True)
class CoincidenceResult:
    r12: float
    visibility: float


@dataclass(frozen=True)
class ModeSpec:
    """Plane-wave mode: wavevector ``k`` and real unit polarization ``e`` with ``e . k = 0``."""

    k: tuple
    polarization: tuple

    def __post_init__(self):
        k = np.asarray(self.k, dtype=float)
        e = np.asarray(self.polarization, dtype=float)
        if k.shape != (3,) or e.shape != (3,):
            raise ValueError("k and polarization must be 3-vectors")
        kn = float(np.linalg.norm(k))
        if kn == 0:
            raise ValueError("wavevector must be nonzero")
        if abs(np.linalg.norm(e) - 1.0) > 1e-12:
            raise ValueError("polarization must be a unit vector")
        if abs(e @ k) > 1e-12 * kn:
            raise ValueError("polarization must be orthogonal to k")
        object.__setattr__(self, "k", tuple(k))
        object.__setattr__(self, "polarization", tuple(e))

    def omega(self, c: float = 1.0) -> float:
        return c * float(np.linalg.norm(self.k))


# --- single-mode counting --------------------------------------------------


def mean_rate(state: SingleModeGaussian) -> float:
    """``<|alpha|^2 - 1/2>`` under the Wigner function, from its moments."""
    vr, vi = state.variances
    return abs(state.center) ** 2 + vr + vi - 0.5


def mc_rate(batch: SampleBatch, mode_index: int) -> RateEstimate:
    if batch.count == 0:
        raise ValueError("empty batch")
    if not 0 <= mode_index < batch.arity:
        raise IndexError(f"mode_index {mode_index} out of range for arity {batch.arity}")
    return RateEstimate.from_values(np.abs(batch.draws[:, mode_index]) ** 2 - 0.5)


# --- fields and point detectors ---------------------------------------------


def field_intensity(modes, amplitudes, r, t: float, units: Units = NATURAL):
    """Electric field and intensity of one (or a batch of) realizations.

    ``amplitudes`` has a trailing axis of length ``len(modes)``; returns
    ``E`` with a trailing axis of length 3 and ``I = c eps0 |E|^2``.
    """
    amps = np.asarray(amplitudes, dtype=complex)
    if amps.shape[-1:] != (len(modes),):
        raise ValueError(f"expected {len(modes)} amplitudes, got shape {amps.shape}")
    r = np.asarray(r, dtype=float)
    E = np.zeros(amps.shape[:-1] + (3,))
    for j, mode in enumerate(modes):
        omega = mode.omega(units.c)
        pref = math.sqrt(2.0 * units.hbar * omega / units.L**3)
        phase = np.exp(1j * (np.dot(mode.k, r) - omega * t))
        E += pref * np.real(amps[..., j, None] * np.asarray(mode.polarization) * phase)
    intensity = units.c * units.eps0 * np.sum(E**2, axis=-1)
    return E, intensity


def field_matrix(modes, r, t: float, units: Units = NATURAL) -> np.ndarray:
    """Linear map ``M`` (3 x 2N) with ``E = M q`` for interleaved quadratures ``q``."""
    r = np.asarray(r, dtype=float)
    M = np.zeros((3, 2 * len(modes)))
    for j, mode in enumerate(modes):
        omega = mode.omega(units.c)
        pref = math.sqrt(2.0 * units.hbar * omega / units.L**3)
        phi = np.dot(mode.k, r) - omega * t
        e = np.asarray(mode.polarization)
        M[:, 2 * j] = pref * math.cos(phi) * e
        M[:, 2 * j + 1] = -pref * math.sin(phi) * e
    return M


def zeropoint_intensity(modes, r, t: float, units: Units = NATURAL) -> float:
    """Mean intensity ``I0`` of the vacuum field over the listed modes."""
    M = field_matrix(modes, r, t, units)
    return units.c * units.eps0 * 0.25 * float(np.sum(M**2))


def _pad_with_vacuum(states, n_modes):
    states = list(states)
    used = sum(arity_of(s) for s in states)
    if used > n_modes:
        raise ValueError(f"states cover {used} modes but only {n_modes} are listed")
    return states + [vacuum()] * (n_modes - used)


def point_detector_draws(states, modes, r, t: float, count: int, seed: int,
                         units: Units = NATURAL, chunk_size: int = DEFAULT_CHUNK,
                         threads: int = 1) -> np.ndarray:
    """Per-realization ``I(r, t) - I0``; modes not covered by ``states`` are vacuum."""
    states = _pad_with_vacuum(states, len(modes))
    q = sample_quadratures(states, count, seed, chunk_size, threads)
    amps = q[:, 0::2] + 1j * q[:, 1::2]
    _, intensity = field_intensity(modes, amps, r, t, units)
    return intensity - zeropoint_intensity(modes, r, t, units)


def point_detector_rate(states, modes, r, t: float, count: int, seed: int,
                        units: Units = NATURAL, chunk_size: int = DEFAULT_CHUNK,
                        threads: int = 1) -> RateEstimate:
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    values = point_detector_draws(states, modes, r, t, count, seed, units, chunk_size, threads)
    return RateEstimate.from_values(values)


def point_detector_mean(states, modes, r, t: float, units: Units = NATURAL) -> float:
    """Closed-form ``<I - I0>`` from the gaussian mean and covariance."""
    states = _pad_with_vacuum(states, len(modes))
    means, factors = zip(*(quadrature_factor(s) for s in states))
    mu = np.concatenate(means)
    dim = len(mu)
    L = np.zeros((dim, dim))
    col = 0
    for f in factors:
        k = f.shape[0]
        L[col:col + k, col:col + k] = f
        col += k
    M = field_matrix(modes, r, t, units)
    second = np.sum((M @ L) ** 2) + np.sum((M @ mu) ** 2)
    return units.c * units.eps0 * float(second) - zeropoint_intensity(modes, r, t, units)


# --- polarization coincidences -------------------------------------------------


def malus_project(amp, setting: PolarizerSetting):
    """Amplitude transmitted by a linear polarizer; ``amp`` has trailing axis (x, y)."""
    amp = np.asarray(amp, dtype=complex)
    value = amp[..., 0] * math.cos(setting.angle) + amp[..., 1] * math.sin(setting.angle)
    return complex(value) if value.ndim == 0 else value


def coincidence_closed(n: float, x: float, dphi: float) -> CoincidenceResult:
    """Coincidence rate and visibility for the polarized ``(n, x)`` state."""
    if not n >= 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not abs(x) < 1:
        raise ValueError(f"|x| < 1 required, got {x}")
    modulated = 0.5 * (n + 0.5) ** 2 * x**2
    baseline = n * n + modulated
    if baseline == 0:
        raise ValueError("visibility is undefined when the mean coincidence rate vanishes (n = x = 0)")
    r12 = n * n + modulated * (1.0 + math.cos(2.0 * dphi))
    return CoincidenceResult(r12, modulated / baseline)


def coincidence_mc(state: TwoModeWigner, settings, count: int, seed: int,
                   chunk_size: int = DEFAULT_CHUNK, threads: int = 1) -> RateEstimate:
    """Monte Carlo mean of ``(|lambda|^2 - 1/2)(|mu|^2 - 1/2)`` behind two polarizers."""
    if not state.polarized:
        raise ValueError("coincidence_mc needs a polarized (four-amplitude) state")
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    first, second = settings
    draws = sample_two_mode(state, count, seed, chunk_size, threads).draws
    lam = malus_project(draws[:, 0:2], first)
    mu = malus_project(draws[:, 2:4], second)
    return RateEstimate.from_values((np.abs(lam) ** 2 - 0.5) * (np.abs(mu) ** 2 - 0.5))


def sup_visibility(n: float) -> float:
    """Visibility approached as ``|x| -> 1`` at fixed ``n``."""
    top = 0.5 * (n + 0.5) ** 2
    return top / (n * n + top)


def critical_n(v_target: float, tol: float = 1e-6) -> float:
    """Intensity below which a visibility of ``v_target`` becomes reachable."""
    if v_target <= 1.0 / 3.0:
        raise UnattainableVisibility(
            f"v_target={v_target} <= 1/3 is exceeded at every n; no finite critical n")
    if v_target >= 1.0:
        raise UnattainableVisibility(f"v_target={v_target} >= 1 is reached only at n = 0")
    hi = 1.0
    while sup_visibility(hi) >= v_target:
        hi *= 2.0
    return bisect(lambda n: sup_visibility(n) - v_target, 0.0, hi, xtol=tol)
