"""Reproducible Monte Carlo driver for the calibrated KS experiments.

Each cell (memory exponent d, sample size n) runs N independent
replications: simulate an LRD Gaussian pair, push it through the CMS
transform, and form the normalized KS statistic
K* = K_n / (d_{n,1} c0).  Cells report the replication mean and sd of K*,
the empirical coverage P(K* <= z_gamma) at half-normal critical values,
and the same coverage after empirical standardization.

Replication i of cell (d, n) draws from the substream keyed
(master_seed, bits(d), n, i), so results are deterministic, independent
of the worker count, and stable under extending the replication count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .empirical_process import Sample, ks_statistic
from .errors import StableLrdError
from .gof_test import half_normal_quantile, standardize_ksd
from .hermite_expansion import c0 as coeff_sup
from .hermite_expansion import d_nm
from .lrd_gaussian import (
    LrdModel,
    replication_seed,
    simulate_lrd_pair,
    slowly_varying,
)
from .stable_core import TabulatedStableCdf, cms_g0, cms_g1

__all__ = [
    "ExperimentSpec",
    "TableRow",
    "ExperimentResult",
    "run_cell",
    "run_experiment",
    "WORKERS_ENV_VAR",
]

WORKERS_ENV_VAR = "STABLELRD_WORKERS"
# a cell aborts when more than this fraction of replications fail
_MAX_FAILURE_FRACTION = 1e-3
_CHUNK_SIZE = 64


@dataclass(frozen=True)
class ExperimentSpec:
    """Full experiment description: one (alpha, beta2) over a (d, n) grid."""

    alpha: float
    beta2: float
    ds: tuple[float, ...]
    ns: tuple[int, ...]
    reps: int
    master_seed: int
    gammas: tuple[float, ...] = (0.8, 0.9, 0.95)
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "ds", tuple(float(d) for d in self.ds))
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        if self.reps < 2:
            raise ValueError("need at least two replications")
        if any(not 0.0 < d < 1.0 for d in self.ds):
            raise ValueError("memory exponents must lie in (0, 1)")
        if any(n < 2 for n in self.ns):
            raise ValueError("sample sizes must be >= 2")
        if any(not 0.0 < g < 1.0 for g in self.gammas):
            raise ValueError("coverage levels must lie in (0, 1)")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class TableRow:
    """Summary of one (d, n) cell."""

    d: float
    n: int
    mean: float
    sd: float
    coverage_kstar: tuple[float, ...]
    coverage_ksd: tuple[float, ...]
    n_failed: int

    def __post_init__(self) -> None:
        if any(not 0.0 <= c <= 1.0 for c in self.coverage_kstar + self.coverage_ksd):
            raise ValueError("coverage probabilities must lie in [0, 1]")
        if self.sd < 0.0:
            raise ValueError("sd must be nonnegative")


@dataclass(frozen=True)
class ExperimentResult:
    """All cell rows plus the shared calibration metadata."""

    spec: ExperimentSpec
    rows: tuple[TableRow, ...]
    c0_value: float | None
    c0_x: float | None
    coverage_se: float
    runtime_s: float


def _transform(z1, z2, alpha: float, beta2: float):
    if alpha == 1.0:
        return cms_g1(z1, z2, beta2)
    return cms_g0(z1, z2, alpha, beta2)


def _replication_kstar(
    alpha: float,
    beta2: float,
    model: LrdModel,
    n: int,
    master_seed: int,
    index: int,
    dn_c0: float,
    null_cdf,
) -> float:
    seed = replication_seed(master_seed, model.d, n, index)
    pair = simulate_lrd_pair(model, n, seed)
    draws = _transform(pair.z1, pair.z2, alpha, beta2)
    sample = Sample(draws, provenance=(model, index))
    return ks_statistic(sample, null_cdf) / dn_c0


def _run_chunk(args) -> list[float | None]:
    alpha, beta2, d, n, master_seed, indices, dn_c0, null_cdf = args
    model = LrdModel(d)
    out: list[float | None] = []
    for i in indices:
        try:
            out.append(
                _replication_kstar(alpha, beta2, model, n, master_seed, i, dn_c0, null_cdf)
            )
        except (StableLrdError, ValueError, FloatingPointError):
            out.append(None)
    return out


def _cell_kstars(
    spec: ExperimentSpec, d: float, n: int, dn_c0: float, null_cdf, workers: int
) -> list[float | None]:
    indices = list(range(spec.reps))
    chunks = [indices[i : i + _CHUNK_SIZE] for i in range(0, len(indices), _CHUNK_SIZE)]
    args = [
        (spec.alpha, spec.beta2, d, n, spec.master_seed, chunk, dn_c0, null_cdf)
        for chunk in chunks
    ]
    if workers == 1:
        chunk_results = [_run_chunk(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk_results = list(pool.map(_run_chunk, args))
    return [k for chunk in chunk_results for k in chunk]


def _effective_workers(spec: ExperimentSpec) -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return max(1, int(env))
    return spec.workers


def run_cell(
    spec: ExperimentSpec,
    d: float,
    n: int,
    c0_value: float | None = None,
    null_cdf=None,
    workers: int | None = None,
) -> TableRow:
    """Run the N replications of one (d, n) cell and summarize."""
    model = LrdModel(d)
    if c0_value is None:
        c0_value = coeff_sup(spec.alpha, spec.beta2).value
    if null_cdf is None:
        null_cdf = TabulatedStableCdf(spec.alpha, spec.beta2)
    if workers is None:
        workers = _effective_workers(spec)
    dn = d_nm(1, d, n, slowly_varying(model, n))
    raw = _cell_kstars(spec, d, n, dn * c0_value, null_cdf, workers)
    kstars = np.array([k for k in raw if k is not None], dtype=float)
    n_failed = spec.reps - kstars.size
    if n_failed > _MAX_FAILURE_FRACTION * spec.reps:
        raise StableLrdError(
            f"cell (d={d}, n={n}): {n_failed}/{spec.reps} replications failed"
        )
    zs = [half_normal_quantile(g) for g in spec.gammas]
    cov_kstar = tuple(float(np.mean(kstars <= z)) for z in zs)
    ksd = standardize_ksd(kstars)
    cov_ksd = tuple(float(np.mean(ksd <= z)) for z in zs)
    return TableRow(
        d=d,
        n=n,
        mean=float(kstars.mean()),
        sd=float(kstars.std(ddof=1)),
        coverage_kstar=cov_kstar,
        coverage_ksd=cov_ksd,
        n_failed=n_failed,
    )


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    """Run the Cartesian (d, n) grid; c0 and the CDF table are built once."""
    start = time.perf_counter()
    rows: list[TableRow] = []
    c0_value = c0_x = None
    if spec.ds and spec.ns:
        c0_result = coeff_sup(spec.alpha, spec.beta2)
        c0_value, c0_x = c0_result.value, c0_result.x
        null_cdf = TabulatedStableCdf(spec.alpha, spec.beta2)
        workers = _effective_workers(spec)
        for d in spec.ds:
            for n in spec.ns:
                rows.append(
                    run_cell(spec, d, n, c0_value=c0_value, null_cdf=null_cdf, workers=workers)
                )
    return ExperimentResult(
        spec=spec,
        rows=tuple(rows),
        c0_value=c0_value,
        c0_x=c0_x,
        coverage_se=float(np.sqrt(0.25 / spec.reps)),
        runtime_s=time.perf_counter() - start,
    )
