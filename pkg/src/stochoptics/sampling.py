"""Seeded, chunked sampling of gaussian Wigner distributions.

Random numbers come from the counter-based Philox generator.  Draw ``i``
belongs to chunk ``i // chunk_size`` and chunk ``j`` uses the substream
``SeedSequence(seed, spawn_key=(j,))``.  Output therefore depends only on
``(seed, count, chunk_size)``; the number of worker threads changes the
schedule, never the numbers.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._io import atomic_write_text, fmt
from .gaussian import SingleModeGaussian, TwoModeWigner

DEFAULT_CHUNK = 1 << 16


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk,))))


def standard_normals(count: int, dim: int, seed: int, chunk_size: int = DEFAULT_CHUNK,
                     threads: int = 1) -> np.ndarray:
    """``(count, dim)`` array of independent standard normals."""
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    if chunk_size < 1:
        raise ValueError(f"chunk_size must be at least 1, got {chunk_size}")
    out = np.empty((count, dim))
    n_chunks = math.ceil(count / chunk_size)

    def fill(j):
        rows = out[j * chunk_size:(j + 1) * chunk_size]
        chunk_generator(seed, j).standard_normal(out=rows)

    if threads <= 1 or n_chunks == 1:
        for j in range(n_chunks):
            fill(j)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, range(n_chunks)))
    return out


def quadrature_factor(state) -> tuple[np.ndarray, np.ndarray]:
    """Mean and a factor ``L`` with ``L @ L.T`` equal to the quadrature covariance.

    Two-mode states are factored pair by pair: for ``(u, v)`` with covariance
    ``s^2 [[1, x], [x, 1]]``, ``u = s z1`` and ``v = s (x z1 + sqrt(1-x^2) z2)``.
    """
    if isinstance(state, SingleModeGaussian):
        vr, vi = state.variances
        mean = np.array([state.center.real, state.center.imag])
        return mean, np.diag([math.sqrt(vr), math.sqrt(vi)])
    if isinstance(state, TwoModeWigner):
        m = state.arity
        half = m // 2
        s = math.sqrt(state.quadrature_variance)
        pair = s * np.array([[1.0, 0.0], [state.x, math.sqrt(1.0 - state.x**2)]])
        L = np.zeros((2 * m, 2 * m))
        for j in range(half):
            for q in (0, 1):
                ia, ib = 2 * j + q, 2 * (j + half) + q
                idx = [ia, ib]
                L[np.ix_(idx, idx)] = pair
        return np.zeros(2 * m), L
    raise TypeError(f"cannot sample {type(state).__name__}")


def arity_of(state) -> int:
    return 1 if isinstance(state, SingleModeGaussian) else state.arity


@dataclass(frozen=True)
class SampleBatch:
    """Complex mode amplitudes, one row per draw.

    Columns are ``alpha`` (single mode), ``(alpha, beta)`` or
    ``(alpha_x, alpha_y, beta_x, beta_y)``.
    """

    seed: int
    draws: np.ndarray
    polarized: bool = False

    @property
    def count(self) -> int:
        return self.draws.shape[0]

    @property
    def arity(self) -> int:
        return self.draws.shape[1]

    def columns(self) -> list[str]:
        labels = {1: ["ax"], 2: ["ax", "bx"], 4: ["ax", "ay", "bx", "by"]}[self.arity]
        header = ["draw"]
        for lab in labels:
            header += [f"re_{lab}", f"im_{lab}"]
        return header

    def to_csv_text(self) -> str:
        lines = [",".join(self.columns())]
        flat = np.empty((self.count, 2 * self.arity))
        flat[:, 0::2] = self.draws.real
        flat[:, 1::2] = self.draws.imag
        for i, row in enumerate(flat):
            lines.append(",".join([str(i)] + [fmt(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_csv(self, path) -> None:
        atomic_write_text(path, self.to_csv_text())

    @classmethod
    def from_csv(cls, path, seed: int = 0) -> "SampleBatch":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            rows = np.array([[float(v) for v in row[1:]] for row in reader])
        arity = (len(header) - 1) // 2
        rows = rows.reshape(-1, 2 * arity)
        draws = rows[:, 0::2] + 1j * rows[:, 1::2]
        return cls(seed, draws, polarized=arity == 4)


def sample_quadratures(states, count: int, seed: int, chunk_size: int = DEFAULT_CHUNK,
                       threads: int = 1) -> np.ndarray:
    """Joint real quadratures for a product of independent factors.

    Returns ``(count, 2*total_arity)``: Re and Im interleaved per amplitude.
    """
    parts = [quadrature_factor(s) for s in states]
    dim = sum(len(mean) for mean, _ in parts)
    z = standard_normals(count, dim, seed, chunk_size, threads)
    out = np.empty_like(z)
    col = 0
    for mean, L in parts:
        k = len(mean)
        out[:, col:col + k] = z[:, col:col + k] @ L.T + mean
        col += k
    return out


def _to_complex(q: np.ndarray) -> np.ndarray:
    return q[:, 0::2] + 1j * q[:, 1::2]


def sample_single_mode(state: SingleModeGaussian, count: int, seed: int,
                       chunk_size: int = DEFAULT_CHUNK, threads: int = 1) -> SampleBatch:
    q = sample_quadratures([state], count, seed, chunk_size, threads)
    return SampleBatch(seed, _to_complex(q))


def sample_two_mode(state: TwoModeWigner, count: int, seed: int,
                    chunk_size: int = DEFAULT_CHUNK, threads: int = 1) -> SampleBatch:
    """Draw amplitudes distributed according to a two-mode Wigner function."""
    q = sample_quadratures([state], count, seed, chunk_size, threads)
    return SampleBatch(seed, _to_complex(q), polarized=state.polarized)
