"""Stable laws: parameterizations, Gaussian-driven CMS transforms, and the CDF.

Two characteristic-function parameterizations are supported for
X ~ S_alpha(beta, sigma, mu), 0 < alpha <= 2:

  (A)  log psi(z) = i mu z - sigma^a |z|^a [1 - i beta sgn(z) tan(pi a/2)]   (a != 1)
       log psi(z) = i mu z - sigma |z| [1 + i beta sgn(z) (2/pi) log|z|]     (a == 1)

  (B)  log psi(z) = i mu z - sigma2^a |z|^a exp{-i beta2 sgn(z) (pi/2) K(a)} (a != 1)
       log psi(z) = i mu z - sigma2 |z| [pi/2 + i beta2 sgn(z) log|z|]       (a == 1)

with K(a) = a - 1 + sgn(1 - a).  The (B) form is the analytically
convenient one: the Chambers-Mallows-Stuck maps G0 (alpha != 1) and G1
(alpha == 1) below turn two independent standard normals into an exact
S_alpha(beta2, 1, 0) draw in form (B), via the uniform angle
gamma = pi Phi(z1) - pi/2 and the unit exponential W = -log(1 - Phi(z2)).

The CDF in form (B) is evaluated by adaptive quadrature of single-angle
integral representations (one per alpha regime and sign of x), each
validated against Monte Carlo draws of the transforms themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special
from scipy.integrate import quad, quad_vec
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from .errors import DomainError, NoConvergence, QuadratureFailure

__all__ = [
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
]

_PI = math.pi
_HALF_PI = math.pi / 2.0
# quadrature hint offsets relative to interval length; resolve integrand
# spikes pinned at either endpoint
_ENDPOINT_LADDER = np.array([1e-8, 1e-6, 1e-4, 1e-2, 0.1])
# error-estimate ceiling above which quadrature results are not trusted
_QUAD_ERR_CEILING = 1e-6


@dataclass(frozen=True)
class StableParamsA:
    """Parameters in form (A): stability alpha, asymmetry beta, scale, location."""

    alpha: float
    beta: float
    sigma: float
    mu: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 2.0:
            raise ValueError(f"alpha must lie in (0, 2], got {self.alpha}")
        if abs(self.beta) > 1.0:
            raise ValueError(f"beta must lie in [-1, 1], got {self.beta}")
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")


@dataclass(frozen=True)
class StableParamsB:
    """Parameters in form (B); alpha = 2 is excluded by construction."""

    alpha: float
    beta2: float
    sigma2: float
    mu: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 2.0:
            raise ValueError(f"alpha must lie in (0, 2), got {self.alpha}")
        if abs(self.beta2) > 1.0:
            raise ValueError(f"beta2 must lie in [-1, 1], got {self.beta2}")
        if self.sigma2 <= 0.0:
            raise ValueError(f"sigma2 must be positive, got {self.sigma2}")


@dataclass(frozen=True)
class CmsAuxiliaries:
    """Auxiliary variates of the CMS map: uniform angle, exponential, shift."""

    gamma: float
    w: float
    gamma0: float

    def __post_init__(self) -> None:
        if not -_HALF_PI <= self.gamma <= _HALF_PI:
            raise ValueError("gamma outside [-pi/2, pi/2]")
        if self.w < 0.0:
            raise ValueError("w must be positive")


def k_alpha(alpha: float) -> float:
    """K(alpha) = alpha - 1 + sgn(1 - alpha); discontinuous at alpha = 1."""
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (0, 2), got {alpha}")
    return alpha - 1.0 + math.copysign(1.0, 1.0 - alpha) if alpha != 1.0 else 0.0


def gamma0(alpha: float, beta2: float) -> float:
    """Angle shift -beta2 * pi * K(alpha) / (2 alpha); always in [-pi/2, pi/2]."""
    if abs(beta2) > 1.0:
        raise DomainError(f"beta2 must lie in [-1, 1], got {beta2}")
    return -beta2 * _PI * k_alpha(alpha) / (2.0 * alpha)


def convert_a_to_b(p: StableParamsA) -> StableParamsB:
    """Map form-(A) parameters to form (B).

    For alpha != 1 the asymmetries are linked by
    tan(beta2 pi K(alpha)/2) = beta tan(pi alpha/2); the principal-branch
    arctan solves this exactly on [-1, 1] for both alpha regimes.
    """
    if p.alpha == 2.0:
        raise DomainError("form (B) excludes alpha = 2")
    if p.alpha == 1.0:
        return StableParamsB(1.0, p.beta, 2.0 * p.sigma / _PI, p.mu)
    ka = k_alpha(p.alpha)
    t = p.beta * math.tan(_HALF_PI * p.alpha)
    # principal-branch solution; clamp the ulp excursion at |beta| = 1
    beta2 = min(max(2.0 * math.atan(t) / (_PI * ka), -1.0), 1.0)
    residual = math.tan(beta2 * _PI * ka / 2.0) - t
    if abs(residual) > 1e-12 * (1.0 + abs(t)):
        raise NoConvergence(f"asymmetry solve residual {residual:.3e}")
    sigma2 = p.sigma * (1.0 + t * t) ** (1.0 / (2.0 * p.alpha))
    return StableParamsB(p.alpha, beta2, sigma2, p.mu)


def convert_b_to_a(p: StableParamsB) -> StableParamsA:
    """Inverse of :func:`convert_a_to_b`."""
    if p.alpha == 1.0:
        return StableParamsA(1.0, p.beta2, _HALF_PI * p.sigma2, p.mu)
    ka = k_alpha(p.alpha)
    t = math.tan(p.beta2 * _PI * ka / 2.0)
    beta = t / math.tan(_HALF_PI * p.alpha)
    sigma = p.sigma2 * (1.0 + t * t) ** (-1.0 / (2.0 * p.alpha))
    return StableParamsA(p.alpha, beta, sigma, p.mu)


def gamma_of(z):
    """Uniform angle gamma(z) = pi Phi(z) - pi/2 in (-pi/2, pi/2)."""
    out = _PI * special.ndtr(np.asarray(z, dtype=float)) - _HALF_PI
    return float(out) if out.ndim == 0 else out


def w_of(z):
    """Unit exponential W(z) = -log(1 - Phi(z)), computed as -log Phi(-z)."""
    out = -special.log_ndtr(-np.asarray(z, dtype=float))
    return float(out) if out.ndim == 0 else out


def cms_auxiliaries(z1: float, z2: float, alpha: float, beta2: float) -> CmsAuxiliaries:
    """Bundle (gamma(z1), W(z2), gamma0) for one pair of normals."""
    return CmsAuxiliaries(gamma=gamma_of(z1), w=w_of(z2), gamma0=gamma0(alpha, beta2))


def _scalarize(out, *inputs):
    if all(np.ndim(v) == 0 for v in inputs):
        return float(out)
    return out


def cms_g0(z1, z2, alpha: float, beta2: float):
    """CMS transform for alpha != 1; maps iid N(0,1) pairs to S_alpha(beta2,1,0).

    Computed in log space so extreme angles only overflow to +-inf when the
    true value exceeds the floating range.  Output is positive exactly when
    gamma(z1) > gamma0.
    """
    if alpha == 1.0:
        raise DomainError("cms_g0 requires alpha != 1; use cms_g1")
    g = gamma_of(np.asarray(z1, dtype=float))
    w = w_of(np.asarray(z2, dtype=float))
    g0 = gamma0(alpha, beta2)
    sin_term = np.sin(alpha * (g - g0))
    # cos(gamma - alpha(gamma - gamma0)) >= 0 on the angle range; clip the
    # ulp-negative rounding at extreme asymmetry before taking logs
    cos_mix = np.maximum(np.cos(g - alpha * (g - g0)), 0.0)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        log_mag = (
            np.log(np.abs(sin_term))
            - np.log(np.cos(g)) / alpha
            + (1.0 - alpha) / alpha * (np.log(cos_mix) - np.log(w))
        )
        out = np.sign(sin_term) * np.exp(log_mag)
    out = np.where(sin_term == 0.0, 0.0, out)
    return _scalarize(out, z1, z2)


def cms_g1(z1, z2, beta2: float):
    """CMS transform for alpha == 1; maps iid N(0,1) pairs to S_1(beta2,1,0)."""
    g = gamma_of(np.asarray(z1, dtype=float))
    b = _HALF_PI + beta2 * g
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        if beta2 == 0.0:
            out = b * np.tan(g) + 0.0 * np.asarray(z2, dtype=float)
        else:
            w = w_of(np.asarray(z2, dtype=float))
            out = b * np.tan(g) - beta2 * np.log(w * np.cos(g) / b)
    return _scalarize(out, z1, z2)


def affine_map(x, target: StableParamsA):
    """Scale/shift an S_alpha(beta,1,0) draw to S_alpha(beta,sigma,mu).

    The alpha = 1 branch carries the extra (2/pi) beta sigma log(sigma)
    drift required for closure under affine maps.
    """
    x = np.asarray(x, dtype=float)
    if target.alpha == 1.0:
        out = target.sigma * x + (2.0 / _PI) * target.beta * target.sigma * math.log(
            target.sigma
        ) + target.mu
    else:
        out = target.sigma * x + target.mu
    return _scalarize(out, x)


# --------------------------------------------------------------------------
# CDF of S_alpha(beta2, 1, 0) in form (B)
# --------------------------------------------------------------------------


def _log_a_kernel(g, alpha: float, g0: float):
    """log a(gamma) for the alpha != 1 tail kernel.

    a(gamma) = (sin(alpha(gamma-gamma0))/cos gamma)^(alpha/(1-alpha))
               * cos(gamma - alpha(gamma-gamma0)) / cos gamma,
    positive on (gamma0, pi/2).
    """
    g = np.asarray(g, dtype=float)
    diff = g - g0
    log_sin = np.log(np.sin(alpha * diff))
    log_cos = np.log(np.cos(g))
    log_mix = np.log(np.maximum(np.cos(g - alpha * diff), 0.0))
    return (alpha / (1.0 - alpha)) * (log_sin - log_cos) + log_mix - log_cos


def _log_a1_kernel(g, beta2: float):
    """log a1(gamma) for the alpha == 1 kernel (beta2 != 0).

    a1(gamma) = (pi/2 + beta2 gamma)/cos gamma
                * exp{(pi/2 + beta2 gamma) tan(gamma) / beta2}.
    """
    g = np.asarray(g, dtype=float)
    b = _HALF_PI + beta2 * g
    return np.log(b) - np.log(np.cos(g)) + b * np.tan(g) / beta2


def _scaled_kernel(log_kernel, scale):
    """scale * exp(log_kernel) without 0*inf artifacts at either extreme."""
    log_kernel = np.asarray(log_kernel, dtype=float)
    if scale == 0.0:
        return np.zeros_like(log_kernel)
    if np.isinf(scale):
        return np.full_like(log_kernel, np.inf)
    with np.errstate(over="ignore"):
        return scale * np.exp(log_kernel)


def _exp_neg_scaled(log_kernel, scale):
    """exp(-scale * exp(log_kernel)) with overflow mapped to the correct limit."""
    with np.errstate(over="ignore"):
        return np.exp(-_scaled_kernel(log_kernel, scale))


def _power_scale(x: float, alpha: float) -> float:
    """x ** (alpha/(alpha-1)) for x >= 0, mapped to inf/0 instead of raising."""
    with np.errstate(divide="ignore", over="ignore"):
        return float(np.float64(x) ** np.float64(alpha / (alpha - 1.0)))


def _hinted_points(a: float, b: float) -> list[float]:
    width = b - a
    pts = np.concatenate([a + width * _ENDPOINT_LADDER, b - width * _ENDPOINT_LADDER])
    return sorted(float(p) for p in pts if a < p < b)


def _quad_angle(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Adaptive quadrature over an angle interval with endpoint-spike hints."""
    val, err = quad(
        f,
        a,
        b,
        epsabs=tol / 4.0,
        epsrel=1e-13,
        limit=500,
        points=_hinted_points(a, b),
    )
    if err > _QUAD_ERR_CEILING:
        raise QuadratureFailure(
            f"quadrature error estimate {err:.3e} exceeds {_QUAD_ERR_CEILING:.0e}"
        )
    return val, err


def _validate_b_params(alpha: float, beta2: float) -> None:
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (0, 2), got {alpha}")
    if abs(beta2) > 1.0:
        raise DomainError(f"beta2 must lie in [-1, 1], got {beta2}")


def stable_cdf(x: float, alpha: float, beta2: float, tol: float = 1e-8) -> float:
    """CDF of S_alpha(beta2, 1, 0) in form (B) at a single point.

    Satisfies F(x, alpha, beta2) = 1 - F(-x, alpha, -beta2); negative
    arguments (negative beta2 for alpha == 1) are routed through that
    symmetry, so only the x >= 0 integral forms are evaluated directly:

      0 < alpha < 1:  F(x) = (gamma0 + pi/2)/pi
                             + (1/pi) int_{gamma0}^{pi/2} e^{-x^(a/(a-1)) a(g)} dg
      alpha == 1:     F(x) = (1/pi) int_{-pi/2}^{pi/2} e^{-e^(-x/beta2) a1(g)} dg
                      (beta2 = 0 is the closed-form Cauchy with scale pi/2)
      1 < alpha < 2:  F(x) = 1 - (1/pi) int_{gamma0}^{pi/2} e^{-x^(a/(a-1)) a(g)} dg
    """
    _validate_b_params(alpha, beta2)
    x = float(x)
    if math.isnan(x):
        raise DomainError("x must not be NaN")
    if math.isinf(x):
        return 1.0 if x > 0 else 0.0

    if alpha == 1.0:
        if beta2 == 0.0:
            return 0.5 + math.atan(2.0 * x / _PI) / _PI
        if beta2 < 0.0:
            return 1.0 - stable_cdf(-x, alpha, -beta2, tol)
        with np.errstate(over="ignore"):
            scale = np.exp(-x / beta2)
        val, _ = _quad_angle(
            lambda g: _exp_neg_scaled(_log_a1_kernel(g, beta2), scale),
            -_HALF_PI,
            _HALF_PI,
            tol,
        )
        return min(max(val / _PI, 0.0), 1.0)

    if x < 0.0:
        return 1.0 - stable_cdf(-x, alpha, -beta2, tol)

    g0 = gamma0(alpha, beta2)
    mass_left = (g0 + _HALF_PI) / _PI  # P(gamma <= gamma0), the x = 0 atom side
    if alpha < 1.0 and x == 0.0:
        return mass_left
    if abs(g0 - _HALF_PI) < 1e-15:
        # empty angle interval (beta2 = -1, alpha < 1): support is (-inf, 0]
        return 1.0
    scale = _power_scale(x, alpha)
    val, _ = _quad_angle(
        lambda g: _exp_neg_scaled(_log_a_kernel(g, alpha, g0), scale),
        g0,
        _HALF_PI,
        tol,
    )
    if alpha < 1.0:
        out = mass_left + val / _PI
    else:
        out = 1.0 - val / _PI
    return min(max(out, 0.0), 1.0)


def _exp_neg_batch(log_kernel_value: float, scales: np.ndarray) -> np.ndarray:
    """exp(-scales * exp(log_kernel_value)) elementwise over a scale vector.

    The zero/inf scale rows carry their exact limits (x = 0 and the routed
    x = +-inf points of a grid), avoiding 0 * inf artifacts.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        t = scales * math.exp(log_kernel_value) if log_kernel_value < 709.0 else scales * np.inf
        t = np.where(scales == 0.0, 0.0, t)
        t = np.where(np.isinf(scales), np.inf, t)
        return np.exp(-t)


def _cdf_batch_positive(xs: np.ndarray, alpha: float, beta2: float, tol: float) -> np.ndarray:
    """Vectorized F(x) for x >= 0, alpha != 1 (one adaptive pass for all x)."""
    g0 = gamma0(alpha, beta2)
    mass_left = (g0 + _HALF_PI) / _PI
    if abs(g0 - _HALF_PI) < 1e-15:
        return np.ones_like(xs)
    with np.errstate(divide="ignore", over="ignore"):
        scales = xs ** (alpha / (alpha - 1.0))
    val, _ = quad_vec(
        lambda g: _exp_neg_batch(float(_log_a_kernel(g, alpha, g0)), scales),
        g0,
        _HALF_PI,
        epsabs=tol / 4.0,
        limit=400,
    )
    out = mass_left + val / _PI if alpha < 1.0 else 1.0 - val / _PI
    return np.clip(out, 0.0, 1.0)


def _cdf_batch_alpha1(xs: np.ndarray, beta2: float, tol: float) -> np.ndarray:
    """Vectorized F(x) for alpha == 1, beta2 > 0."""
    with np.errstate(over="ignore"):
        scales = np.exp(-xs / beta2)
    val, _ = quad_vec(
        lambda g: _exp_neg_batch(float(_log_a1_kernel(g, beta2)), scales),
        -_HALF_PI,
        _HALF_PI,
        epsabs=tol / 4.0,
        limit=400,
    )
    return np.clip(val / _PI, 0.0, 1.0)


def stable_cdf_batch(xs, alpha: float, beta2: float, tol: float = 1e-9) -> np.ndarray:
    """stable_cdf evaluated on a vector of points in few adaptive passes."""
    _validate_b_params(alpha, beta2)
    xs = np.asarray(xs, dtype=float)
    if alpha == 1.0 and beta2 == 0.0:
        return 0.5 + np.arctan(2.0 * xs / _PI) / _PI
    if alpha == 1.0:
        if beta2 > 0.0:
            return _cdf_batch_alpha1(xs, beta2, tol)
        return 1.0 - _cdf_batch_alpha1(-xs, -beta2, tol)
    out = np.empty_like(xs)
    pos = xs >= 0.0
    if pos.any():
        out[pos] = _cdf_batch_positive(xs[pos], alpha, beta2, tol)
    if (~pos).any():
        out[~pos] = 1.0 - _cdf_batch_positive(-xs[~pos], alpha, -beta2, tol)
    return out


def stable_quantile(p: float, alpha: float, beta2: float, tol: float = 1e-8) -> float:
    """Inverse of :func:`stable_cdf` by bracketing plus Brent's method."""
    _validate_b_params(alpha, beta2)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    lo, hi = -1.0, 1.0
    while stable_cdf(lo, alpha, beta2, tol) > p:
        lo *= 2.0
        if lo < -1e18:
            raise NoConvergence("quantile bracket ran away on the left")
    while stable_cdf(hi, alpha, beta2, tol) < p:
        hi *= 2.0
        if hi > 1e18:
            raise NoConvergence("quantile bracket ran away on the right")
    return brentq(
        lambda v: stable_cdf(v, alpha, beta2, tol) - p, lo, hi, xtol=1e-12, rtol=1e-14
    )


class TabulatedStableCdf:
    """Vectorized stable CDF: monotone interpolation of exact quadrature values.

    Grid nodes are asinh-spaced between the p_tail and 1 - p_tail quantiles
    (dense near the mode, geometric in the heavy tails); queries outside the
    window fall back to exact quadrature.  Interpolation error is ~1e-7,
    far below anything the Kolmogorov-Smirnov statistics can resolve.
    """

    def __init__(
        self,
        alpha: float,
        beta2: float,
        tol: float = 1e-9,
        p_tail: float = 1e-6,
        n_grid: int = 3001,
    ):
        _validate_b_params(alpha, beta2)
        self.alpha = float(alpha)
        self.beta2 = float(beta2)
        self.tol = float(tol)
        q_lo = stable_quantile(p_tail, alpha, beta2, tol)
        q_hi = stable_quantile(1.0 - p_tail, alpha, beta2, tol)
        u = np.linspace(math.asinh(q_lo), math.asinh(q_hi), n_grid)
        xs = np.sinh(u)
        values = stable_cdf_batch(xs, alpha, beta2, tol)
        values = np.maximum.accumulate(values)  # absorb 1e-10 quadrature jitter
        self.x_lo = float(xs[0])
        self.x_hi = float(xs[-1])
        self._interp = PchipInterpolator(u, values, extrapolate=False)

    def __call__(self, x):
        arr = np.atleast_1d(np.asarray(x, dtype=float))
        out = self._interp(np.arcsinh(arr))
        outside = np.isnan(out)
        if outside.any():
            out[outside] = [
                stable_cdf(float(v), self.alpha, self.beta2, self.tol)
                for v in arr[outside]
            ]
        out = np.clip(out, 0.0, 1.0)
        return float(out[0]) if np.ndim(x) == 0 else out
