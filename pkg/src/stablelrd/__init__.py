"""Strongly dependent alpha-stable sequences and calibrated KS testing.

The package covers the full pipeline:

- exact simulation of long-range dependent Gaussian pairs (``lrd_gaussian``),
- Chambers-Mallows-Stuck transforms, stable-law parameterizations and the
  stable CDF (``stable_core``),
- bivariate Hermite expansion coefficients of the empirical process, a
  brute-force oracle, and the LRD normalization constants
  (``hermite_expansion``),
- the exact Kolmogorov-Smirnov statistic (``empirical_process``),
- half-normal-calibrated goodness-of-fit decisions (``gof_test``),
- a reproducible Monte Carlo table harness (``mc_harness``).
"""

from .empirical_process import Sample, edf, ks_statistic, normalized_ks
from .errors import (
    DegenerateSample,
    DomainError,
    EmbeddingFailure,
    NoConvergence,
    NonConvergence,
    NonPositiveDefinite,
    QuadratureFailure,
    RankUndetermined,
    StableLrdError,
)
from .gof_test import (
    HALF_NORMAL_MEAN,
    HALF_NORMAL_SD,
    KsReport,
    half_normal_cdf,
    half_normal_quantile,
    ks_test,
    standardize_ksd,
)
from .hermite_expansion import (
    C0Result,
    CoeffTable,
    HermiteIndex,
    LrdNormalization,
    a1_gamma,
    a_gamma,
    c0,
    c_md,
    coeff_table,
    d_nm,
    hermite_poly,
    hermite_rank,
    j01,
    j10,
    j_oracle,
    lrd_normalization,
    sigma2_nq,
)
from .lrd_gaussian import (
    GaussianPairPath,
    LrdModel,
    autocovariance,
    simulate_lrd_pair,
    simulate_lrd_path,
    slowly_varying,
)
from .mc_harness import (
    ExperimentResult,
    ExperimentSpec,
    TableRow,
    run_cell,
    run_experiment,
)
from .stable_core import (
    CmsAuxiliaries,
    StableParamsA,
    StableParamsB,
    TabulatedStableCdf,
    affine_map,
    cms_auxiliaries,
    cms_g0,
    cms_g1,
    convert_a_to_b,
    convert_b_to_a,
    gamma0,
    gamma_of,
    k_alpha,
    stable_cdf,
    stable_cdf_batch,
    stable_quantile,
    w_of,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # lrd_gaussian
    "LrdModel",
    "GaussianPairPath",
    "autocovariance",
    "slowly_varying",
    "simulate_lrd_path",
    "simulate_lrd_pair",
    # stable_core
    "StableParamsA",
    "StableParamsB",
    "CmsAuxiliaries",
    "k_alpha",
    "gamma0",
    "convert_a_to_b",
    "convert_b_to_a",
    "gamma_of",
    "w_of",
    "cms_auxiliaries",
    "cms_g0",
    "cms_g1",
    "affine_map",
    "stable_cdf",
    "stable_cdf_batch",
    "stable_quantile",
    "TabulatedStableCdf",
    # hermite_expansion
    "HermiteIndex",
    "CoeffTable",
    "LrdNormalization",
    "C0Result",
    "hermite_poly",
    "a_gamma",
    "a1_gamma",
    "j10",
    "j01",
    "j_oracle",
    "hermite_rank",
    "c_md",
    "sigma2_nq",
    "d_nm",
    "lrd_normalization",
    "c0",
    "coeff_table",
    # empirical_process
    "Sample",
    "edf",
    "ks_statistic",
    "normalized_ks",
    # gof_test
    "HALF_NORMAL_MEAN",
    "HALF_NORMAL_SD",
    "KsReport",
    "half_normal_quantile",
    "half_normal_cdf",
    "ks_test",
    "standardize_ksd",
    # mc_harness
    "ExperimentSpec",
    "TableRow",
    "ExperimentResult",
    "run_cell",
    "run_experiment",
    # errors
    "StableLrdError",
    "EmbeddingFailure",
    "NonPositiveDefinite",
    "NoConvergence",
    "NonConvergence",
    "QuadratureFailure",
    "DomainError",
    "RankUndetermined",
    "DegenerateSample",
]
