"""Empirical distribution function and the exact Kolmogorov-Smirnov statistic.

For a sample x_1..x_n and a continuous monotone null CDF F, the sup
statistic K_n = sup_x |F_n(x) - F(x)| is attained at the order statistics:

    K_n = max_i max( i/n - F(x_(i)),  F(x_(i)) - (i-1)/n ),

so it is computed exactly in O(n log n) rather than on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hermite_expansion import c0 as coeff_sup
from .hermite_expansion import d_nm
from .lrd_gaussian import LrdModel, slowly_varying
from .stable_core import stable_cdf

__all__ = ["Sample", "edf", "ks_statistic", "normalized_ks"]


@dataclass(frozen=True)
class Sample:
    """Immutable observation vector; non-finite entries are rejected."""

    values: np.ndarray
    provenance: tuple | None = None

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 1:
            raise ValueError("sample must be a nonempty 1-d array")
        if not np.isfinite(values).all():
            raise ValueError("sample contains non-finite values")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_sorted", np.sort(values))

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def sorted_values(self) -> np.ndarray:
        return self._sorted


def edf(sample: Sample, x):
    """Right-continuous empirical CDF: (1/n) #\\{i : x_i <= x\\}."""
    pos = np.searchsorted(sample.sorted_values, np.asarray(x, dtype=float), side="right")
    out = pos / sample.n
    return float(out) if np.ndim(x) == 0 else out


def _eval_cdf(null_cdf, xs: np.ndarray) -> np.ndarray:
    try:
        out = np.asarray(null_cdf(xs), dtype=float)
        if out.shape == xs.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(null_cdf(float(v))) for v in xs])


def ks_statistic(sample: Sample, null_cdf) -> float:
    """Exact sup |F_n - F| against a continuous monotone CDF evaluator."""
    xs = sample.sorted_values
    f = _eval_cdf(null_cdf, xs)
    n = sample.n
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - f)
    d_minus = np.max(f - (i - 1) / n)
    return float(max(d_plus, d_minus, 0.0))


def normalized_ks(
    sample: Sample,
    alpha: float,
    beta2: float,
    d: float,
    c0_value: float | None = None,
    null_cdf=None,
) -> float:
    """K_n / (d_{n,1} c0): the statistic whose null limit is |N(0,1)|.

    ``c0_value`` and ``null_cdf`` allow a Monte Carlo driver to reuse the
    cached coefficient supremum and a tabulated CDF; by default both are
    computed from (alpha, beta2) directly.
    """
    model = LrdModel(d)
    n = sample.n
    dn = d_nm(1, d, n, slowly_varying(model, n))
    if c0_value is None:
        c0_value = coeff_sup(alpha, beta2).value
    if null_cdf is None:
        null_cdf = lambda v: stable_cdf(v, alpha, beta2)  # noqa: E731
    kn = ks_statistic(sample, null_cdf)
    return kn / (dn * c0_value)
