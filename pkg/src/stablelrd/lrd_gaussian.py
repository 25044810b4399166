"""Exact simulation of long-range dependent Gaussian sequences.

The target process is stationary, standard normal in the marginals, with
autocovariance

    r(k) = (1 + k^2)^(-D/2),    0 < D < 1,

which factors as r(k) = k^(-D) L(k) with slowly varying
L(k) = k^D (1+k^2)^(-D/2) -> 1.  Sample paths are drawn by circulant
embedding of the Toeplitz covariance (Davies-Harte style synthesis), which
is exact whenever the circulant eigenvalues are nonnegative; a direct
Cholesky factorization of the Toeplitz matrix is kept as a fallback for
small pathological cases.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from .errors import EmbeddingFailure, NonPositiveDefinite

__all__ = [
    "LrdModel",
    "GaussianPairPath",
    "autocovariance",
    "slowly_varying",
    "simulate_lrd_path",
    "simulate_lrd_pair",
]

# negative circulant eigenvalue mass tolerated (relative to total spectrum)
_NEG_EIG_TOL = 1e-12
# largest n for which the dense Cholesky fallback is attempted
_CHOLESKY_MAX_N = 4096

_FAMILIES = ("inverse_quadratic",)


@dataclass(frozen=True)
class LrdModel:
    """Covariance model r(k) = (1 + k^2)^(-d/2) with memory exponent d.

    The family tag exists so other slowly varying factors can be added
    later; only ``inverse_quadratic`` is implemented.
    """

    d: float
    family: str = "inverse_quadratic"

    def __post_init__(self) -> None:
        if not 0.0 < self.d < 1.0:
            raise ValueError(f"memory exponent must lie in (0, 1), got {self.d}")
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown covariance family {self.family!r}")


@dataclass(frozen=True)
class GaussianPairPath:
    """Two independent LRD Gaussian sample paths of equal length."""

    z1: np.ndarray
    z2: np.ndarray
    model: LrdModel
    seed: object = None

    def __post_init__(self) -> None:
        if self.z1.shape != self.z2.shape or self.z1.ndim != 1:
            raise ValueError("z1 and z2 must be 1-d arrays of equal length")
        if self.z1.size < 1:
            raise ValueError("paths must have length >= 1")

    @property
    def n(self) -> int:
        return self.z1.size


def autocovariance(model: LrdModel, k):
    """Autocovariance r(k) = (1 + k^2)^(-d/2) at integer lag(s) k >= 0."""
    k = np.asarray(k, dtype=float)
    if np.any(k < 0):
        raise ValueError("lag must be nonnegative")
    out = (1.0 + k * k) ** (-model.d / 2.0)
    return float(out) if out.ndim == 0 else out


def slowly_varying(model: LrdModel, k):
    """Slowly varying factor L(k) = k^d * r(k); L(k) -> 1 as k -> inf."""
    k = np.asarray(k, dtype=float)
    out = k**model.d * autocovariance(model, k)
    return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=64)
def _embedding_eigenvalues(family: str, d: float, n: int) -> np.ndarray:
    """Eigenvalues of a nonneg-definite circulant embedding for n samples.

    The minimal embedding (size 2n) occasionally has a slightly negative
    eigenvalue for tiny n; padding with extra covariance lags keeps the
    synthesis exact for the leading n values, so try a few sizes before
    giving up.
    """
    model = LrdModel(d, family)
    last_mass = np.inf
    for mult in (1, 2, 4, 8):
        m = max(n, 2) * mult
        r = autocovariance(model, np.arange(m + 1))
        circ = np.concatenate([r, r[-2:0:-1]])
        lam = np.fft.fft(circ).real
        neg = lam[lam < 0]
        last_mass = -neg.sum() / np.abs(lam).sum() if neg.size else 0.0
        if last_mass <= _NEG_EIG_TOL:
            lam = np.clip(lam, 0.0, None)
            lam.flags.writeable = False
            return lam
    raise EmbeddingFailure(
        f"negative eigenvalue mass {last_mass:.3e} exceeds {_NEG_EIG_TOL:.0e} "
        f"for d={d}, n={n}"
    )


@lru_cache(maxsize=8)
def _toeplitz_cholesky(family: str, d: float, n: int) -> np.ndarray:
    model = LrdModel(d, family)
    cov = scipy.linalg.toeplitz(autocovariance(model, np.arange(n)))
    try:
        chol = scipy.linalg.cholesky(cov, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise NonPositiveDefinite(
            f"Toeplitz covariance numerically singular for d={d}, n={n}"
        ) from exc
    chol.flags.writeable = False
    return chol


def _path_from_eigenvalues(lam: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    """Exact stationary Gaussian synthesis given circulant eigenvalues."""
    nc = lam.size
    m = nc // 2
    g = rng.standard_normal(nc)
    w = np.empty(nc, dtype=complex)
    w[0] = np.sqrt(lam[0]) * g[0]
    w[m] = np.sqrt(lam[m]) * g[m]
    k = np.arange(1, m)
    w[k] = np.sqrt(lam[k] / 2.0) * (g[k] + 1j * g[nc - k])
    w[nc - k] = np.conj(w[k])
    return (np.fft.fft(w).real / np.sqrt(nc))[:n]


def _as_seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def simulate_lrd_path(model: LrdModel, n: int, seed) -> np.ndarray:
    """Draw one exact stationary N(0,1) sequence with autocovariance r(k).

    Deterministic given (model, n, seed); seed may be an integer or a
    numpy SeedSequence.
    """
    if n < 1:
        raise ValueError(f"path length must be >= 1, got {n}")
    rng = np.random.default_rng(_as_seed_sequence(seed))
    if n == 1:
        return rng.standard_normal(1)
    try:
        lam = _embedding_eigenvalues(model.family, model.d, n)
    except EmbeddingFailure:
        if n > _CHOLESKY_MAX_N:
            raise
        chol = _toeplitz_cholesky(model.family, model.d, n)
        return chol @ rng.standard_normal(n)
    return _path_from_eigenvalues(lam, n, rng)


def simulate_lrd_pair(model: LrdModel, n: int, seed) -> GaussianPairPath:
    """Draw two independent LRD paths from substreams of one seed."""
    ss = _as_seed_sequence(seed)
    child1, child2 = ss.spawn(2)
    z1 = simulate_lrd_path(model, n, child1)
    z2 = simulate_lrd_path(model, n, child2)
    return GaussianPairPath(z1=z1, z2=z2, model=model, seed=seed)


def replication_seed(master_seed: int, d: float, n: int, index: int) -> np.random.SeedSequence:
    """Independent, prefix-stable substream for one Monte Carlo replication.

    The key is (bit pattern of d, n, index), so streams do not depend on
    how many replications or cells an experiment contains.
    """
    dbits = struct.unpack("<Q", struct.pack("<d", float(d)))[0]
    return np.random.SeedSequence(master_seed, spawn_key=(dbits, n, index))
