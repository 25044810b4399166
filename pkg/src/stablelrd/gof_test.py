"""Goodness-of-fit decisions calibrated by the half-normal limit law.

Under the simple null the normalized statistic K_n / (d_{n,1} c0)
converges in distribution to |Z| with Z standard normal, so p-values and
critical values are read through half-normal tail probabilities.  The
empirical standardization maps replicated statistics affinely onto the
|Z| mean sqrt(2/pi) and standard deviation sqrt((pi-2)/pi).
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy import special

from .empirical_process import Sample, ks_statistic
from .errors import DegenerateSample
from .hermite_expansion import c0 as coeff_sup
from .hermite_expansion import d_nm
from .lrd_gaussian import LrdModel, slowly_varying
from .stable_core import stable_cdf

__all__ = [
    "HALF_NORMAL_MEAN",
    "HALF_NORMAL_SD",
    "KsReport",
    "half_normal_quantile",
    "half_normal_cdf",
    "ks_test",
    "standardize_ksd",
]

HALF_NORMAL_MEAN = math.sqrt(2.0 / math.pi)  # E|Z| = 0.7979...
HALF_NORMAL_SD = math.sqrt((math.pi - 2.0) / math.pi)  # sd|Z| = 0.6028...


@dataclass(frozen=True)
class KsReport:
    """Kolmogorov-Smirnov test outcome under the half-normal calibration."""

    kn: float
    dn: float
    c0: float
    kstar: float
    p_value: float
    reject: bool
    level: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def half_normal_quantile(gamma: float) -> float:
    """z with P(|Z| <= z) = gamma, i.e. Phi^{-1}((1 + gamma)/2)."""
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")
    return float(special.ndtri((1.0 + gamma) / 2.0))


def half_normal_cdf(k: float) -> float:
    """P(|Z| <= k) = 2 Phi(k) - 1 for k >= 0."""
    if k < 0.0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return float(2.0 * special.ndtr(k) - 1.0)


def ks_test(
    sample: Sample,
    alpha: float,
    beta2: float,
    d: float,
    level: float = 0.05,
    c0_value: float | None = None,
    null_cdf=None,
) -> KsReport:
    """Test the simple null that the sample follows S_alpha(beta2, 1, 0).

    All parameters are user-supplied (no estimation); large normalized
    statistics reject since the limit |Z| is nonnegative.
    """
    if not 0.0 < level < 1.0:
        raise ValueError(f"level must lie in (0, 1), got {level}")
    model = LrdModel(d)
    n = sample.n
    dn = d_nm(1, d, n, slowly_varying(model, n))
    if c0_value is None:
        c0_value = coeff_sup(alpha, beta2).value
    if null_cdf is None:
        null_cdf = lambda v: stable_cdf(v, alpha, beta2)  # noqa: E731
    kn = ks_statistic(sample, null_cdf)
    kstar = kn / (dn * c0_value)
    p_value = 1.0 - half_normal_cdf(kstar)
    return KsReport(
        kn=kn,
        dn=dn,
        c0=c0_value,
        kstar=kstar,
        p_value=p_value,
        reject=bool(p_value < level),
        level=level,
    )


def standardize_ksd(kstars) -> np.ndarray:
    """Affinely map replicated statistics onto the |Z| mean and sd.

    Uses the replication mean and the standard ddof=1 sample standard
    deviation; the output has exactly the half-normal first two sample
    moments by construction.
    """
    kstars = np.asarray(kstars, dtype=float)
    if kstars.ndim != 1 or kstars.size < 2:
        raise ValueError("need at least two replications")
    m = kstars.mean()
    sd = kstars.std(ddof=1)
    # accumulated rounding leaves sd ~ 1e-17 on constant input
    if sd <= 1e-12 * max(1.0, abs(m)):
        raise DegenerateSample("replication statistics have zero spread")
    return (kstars - m) / sd * HALF_NORMAL_SD + HALF_NORMAL_MEAN
