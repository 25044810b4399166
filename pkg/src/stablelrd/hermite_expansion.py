"""Bivariate Hermite expansion coefficients of the stable empirical process.

For X = G(Z1, Z2) with (Z1, Z2) iid standard normal and G the CMS transform,
the indicator 1{X <= x} expands in products of probabilists' Hermite
polynomials with coefficients

    J_{m1,m2}(x) = E[ 1{G(Z1,Z2) <= x} H_{m1}(Z1) H_{m2}(Z2) ].

The first-order pair (J_{1,0}, J_{0,1}) admits single-angle integral
representations built from the tail kernels a(gamma) (alpha != 1) and
a1(gamma) (alpha == 1); every other order can be evaluated by the
brute-force expectation oracle :func:`j_oracle`, which treats G as a black
box and is kept fully independent of those closed forms.

The module also houses the long-range dependence normalization constants:
the variance constant c(m, D) = 2 / ((1 - mD)(2 - mD)), the exact
double-sum variance sigma^2_{n,q}, the normalization d_{n,m}, and the
coefficient supremum c0 = sup_x sqrt(J_{1,0}^2 + J_{0,1}^2) that calibrates
the Kolmogorov-Smirnov limit.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import special
from scipy.optimize import minimize_scalar

from .errors import (
    DomainError,
    NonConvergence,
    QuadratureFailure,
    RankUndetermined,
)
from .lrd_gaussian import LrdModel, autocovariance, slowly_varying
from .stable_core import (
    _exp_neg_scaled,
    _log_a1_kernel,
    _log_a_kernel,
    _power_scale,
    _quad_angle,
    _scaled_kernel,
    _validate_b_params,
    cms_g0,
    cms_g1,
    gamma0,
)

__all__ = [
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
]

_PI = math.pi
_HALF_PI = math.pi / 2.0
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# outer |z1| range: |H_m(z)| phi(z) < 1e-17 beyond this for m <= 6
_Z1_MAX = 10.0
# inner z2 bisection range: P(|Z| > 39) underflows double precision
_Z2_MAX = 39.0
# scan resolution for locating section-type switches of the oracle
_SCAN_POINTS = 4097
_BISECT_STEPS = 90


@dataclass(frozen=True)
class HermiteIndex:
    """Bivariate polynomial order (m1, m2)."""

    m1: int
    m2: int

    def __post_init__(self) -> None:
        if self.m1 < 0 or self.m2 < 0:
            raise ValueError("Hermite orders must be nonnegative")

    @property
    def total(self) -> int:
        return self.m1 + self.m2


@dataclass(frozen=True)
class CoeffTable:
    """First-order coefficients on an x-grid with quadrature error estimates."""

    alpha: float
    beta2: float
    xs: np.ndarray
    j10: np.ndarray
    j01: np.ndarray
    err10: np.ndarray
    err01: np.ndarray
    tol: float

    def __post_init__(self) -> None:
        if np.any(np.diff(self.xs) <= 0):
            raise ValueError("xs must be strictly increasing")
        if np.any(self.err10 > self.tol) or np.any(self.err01 > self.tol):
            raise QuadratureFailure("coefficient error estimate above requested tol")


@dataclass(frozen=True)
class LrdNormalization:
    """Rank-m normalization bundle for sample size n."""

    m: int
    d: float
    n: int
    c_md: float
    d_nm: float
    sigma2_exact: float | None = None


@dataclass(frozen=True)
class C0Result:
    """Coefficient supremum and the x at which it is attained."""

    value: float
    x: float
    x_max: float


def hermite_poly(m: int, u):
    """Probabilists' Hermite H_m(u) via the stable three-term recurrence."""
    if m < 0:
        raise DomainError("order must be nonnegative")
    u = np.asarray(u, dtype=float)
    h_prev = np.zeros_like(u)
    h = np.ones_like(u)
    for j in range(m):
        h, h_prev = u * h - j * h_prev, h
    return float(h) if h.ndim == 0 else h


def _phi(z):
    return np.exp(-0.5 * np.square(np.asarray(z, dtype=float))) / _SQRT_2PI


def _phi_at_exp_tail(t):
    """(phi o Phi^{-1})(1 - e^{-t}) for t >= 0 without forming 1 - e^{-t}.

    Uses Phi^{-1}(1 - e^{-t}) = -Phi^{-1}(e^{-t}) and the evenness of phi,
    so tiny and huge t are both handled at full precision.
    """
    return _phi(special.ndtri_exp(-np.asarray(t, dtype=float)))


def _ndtri_angle(g):
    """Phi^{-1}((gamma + pi/2)/pi): the z1 weight in angle coordinates."""
    return special.ndtri((np.asarray(g, dtype=float) + _HALF_PI) / _PI)


def a_gamma(gamma, alpha: float, gamma0_: float):
    """Tail kernel a(gamma) for alpha != 1, positive on (gamma0, pi/2)."""
    if alpha == 1.0 or not 0.0 < alpha < 2.0:
        raise DomainError("a_gamma requires alpha in (0, 2) with alpha != 1")
    g = np.asarray(gamma, dtype=float)
    if np.any(g <= gamma0_) or np.any(g >= _HALF_PI):
        raise DomainError("gamma outside (gamma0, pi/2)")
    out = np.exp(_log_a_kernel(g, alpha, gamma0_))
    return float(out) if out.ndim == 0 else out


def a1_gamma(gamma, beta2: float):
    """Tail kernel a1(gamma) for alpha == 1, beta2 != 0, on (-pi/2, pi/2)."""
    if beta2 == 0.0:
        raise DomainError("a1_gamma requires beta2 != 0")
    g = np.asarray(gamma, dtype=float)
    if np.any(np.abs(g) >= _HALF_PI):
        raise DomainError("gamma outside (-pi/2, pi/2)")
    with np.errstate(over="ignore"):
        out = np.exp(_log_a1_kernel(g, beta2))
    return float(out) if out.ndim == 0 else out


# --------------------------------------------------------------------------
# first-order coefficients (closed single-angle integrals)
# --------------------------------------------------------------------------


def _j10_with_err(x: float, alpha: float, beta2: float, tol: float) -> tuple[float, float]:
    _validate_b_params(alpha, beta2)
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = float(x)

    if alpha == 1.0:
        if beta2 == 0.0:
            u = (math.atan(2.0 * x / _PI) + _HALF_PI) / _PI
            return -float(_phi(special.ndtri(u))), 0.0
        if beta2 < 0.0:
            return _j10_with_err(-x, alpha, -beta2, tol)
        with np.errstate(over="ignore"):
            scale = np.exp(-x / beta2)
        val, err = _quad_angle(
            lambda g: _exp_neg_scaled(_log_a1_kernel(g, beta2), scale) * _ndtri_angle(g),
            -_HALF_PI,
            _HALF_PI,
            tol,
        )
        return val / _PI, err / _PI

    if x < 0.0:
        return _j10_with_err(-x, alpha, -beta2, tol)

    g0 = gamma0(alpha, beta2)
    atom = float(_phi(_ndtri_angle(g0)))  # phi(Phi^{-1}((gamma0 + pi/2)/pi))
    if alpha < 1.0 and x == 0.0:
        return -atom, 0.0
    if abs(g0 - _HALF_PI) < 1e-15:
        # empty integration range (beta2 = -1, alpha < 1)
        return -atom, 0.0
    scale = _power_scale(x, alpha)
    val, err = _quad_angle(
        lambda g: _exp_neg_scaled(_log_a_kernel(g, alpha, g0), scale) * _ndtri_angle(g),
        g0,
        _HALF_PI,
        tol,
    )
    if alpha < 1.0:
        return val / _PI - atom, err / _PI
    return -val / _PI, err / _PI


def _j01_with_err(x: float, alpha: float, beta2: float, tol: float) -> tuple[float, float]:
    _validate_b_params(alpha, beta2)
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = float(x)

    if alpha == 1.0:
        if beta2 == 0.0:
            # the transform does not depend on z2 when beta2 = 0
            return 0.0, 0.0
        if beta2 < 0.0:
            val, err = _j01_with_err(-x, alpha, -beta2, tol)
            return -val, err
        with np.errstate(over="ignore"):
            scale = np.exp(-x / beta2)
        val, err = _quad_angle(
            lambda g: _phi_at_exp_tail(_scaled_kernel(_log_a1_kernel(g, beta2), scale)),
            -_HALF_PI,
            _HALF_PI,
            tol,
        )
        return val / _PI, err / _PI

    if x < 0.0:
        val, err = _j01_with_err(-x, alpha, -beta2, tol)
        return -val, err

    g0 = gamma0(alpha, beta2)
    if (alpha < 1.0 and x == 0.0) or abs(g0 - _HALF_PI) < 1e-15:
        return 0.0, 0.0
    scale = _power_scale(x, alpha)

    def integrand(g):
        return _phi_at_exp_tail(_scaled_kernel(_log_a_kernel(g, alpha, g0), scale))

    val, err = _quad_angle(integrand, g0, _HALF_PI, tol)
    if alpha < 1.0:
        return val / _PI, err / _PI
    # For 1 < alpha < 2 the transform is increasing in z2, so the indicator
    # is a decreasing function of Z2 and the coefficient must be <= 0 for
    # x >= 0: the integral enters with a leading minus (confirmed against
    # the brute-force oracle; some printed statements of this formula carry
    # the opposite sign).
    return -val / _PI, err / _PI


def j10(x: float, alpha: float, beta2: float, tol: float = 1e-8) -> float:
    """Coefficient J_{1,0}(x) = E[1{G(Z1,Z2) <= x} Z1].

    Dispatches on the alpha regime; x < 0 (beta2 < 0 when alpha == 1) is
    reduced to the positive case via J_{1,0}(x, b) = J_{1,0}(-x, -b).
    """
    return _j10_with_err(x, alpha, beta2, tol)[0]


def j01(x: float, alpha: float, beta2: float, tol: float = 1e-8) -> float:
    """Coefficient J_{0,1}(x) = E[1{G(Z1,Z2) <= x} Z2].

    Identically zero at x = 0 for alpha < 1 and for all x when alpha == 1
    with beta2 = 0; the sign-flipping reduction
    J_{0,1}(x, b) = -J_{0,1}(-x, -b) covers negative arguments.
    """
    return _j01_with_err(x, alpha, beta2, tol)[0]


# --------------------------------------------------------------------------
# brute-force expectation oracle
# --------------------------------------------------------------------------


def _transform(z1, z2, alpha: float, beta2: float):
    if alpha == 1.0:
        return cms_g1(z1, z2, beta2)
    return cms_g0(z1, z2, alpha, beta2)


def _hermite_upper_tail(m: int, t):
    """Exact int_t^inf H_m(z) phi(z) dz; equals H_{m-1}(t) phi(t) for m >= 1."""
    t = np.asarray(t, dtype=float)
    if m == 0:
        return special.ndtr(-t)
    val = hermite_poly(m - 1, t) * _phi(t)
    return np.where(np.isinf(t), 0.0, val)


# section types of {z2 : G(z1, z2) <= x} for fixed z1 (G is monotone in z2)
_ALL_IN, _ALL_OUT, _INCREASING, _DECREASING = 0, 1, 2, 3


def _section_types(z1: np.ndarray, x: float, alpha: float, beta2: float) -> np.ndarray:
    z1 = np.asarray(z1, dtype=float)
    g_lo = _transform(z1, np.full_like(z1, -_Z2_MAX), alpha, beta2)
    g_hi = _transform(z1, np.full_like(z1, _Z2_MAX), alpha, beta2)
    in_lo = g_lo <= x
    in_hi = g_hi <= x
    crossing = np.where(g_hi > g_lo, _INCREASING, _DECREASING)
    types = np.where(in_lo & in_hi, _ALL_IN, np.where(~in_lo & ~in_hi, _ALL_OUT, crossing))
    return np.where(g_lo == g_hi, np.where(in_lo, _ALL_IN, _ALL_OUT), types)


def _section_switches(x: float, alpha: float, beta2: float) -> list[float]:
    """z1 boundaries where the section type changes, located by bisection."""
    zs = np.linspace(-_Z1_MAX, _Z1_MAX, _SCAN_POINTS)
    types = _section_types(zs, x, alpha, beta2)
    cuts = []
    for i in np.flatnonzero(types[1:] != types[:-1]):
        lo, hi = float(zs[i]), float(zs[i + 1])
        t_lo = types[i]
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if _section_types(np.array([mid]), x, alpha, beta2)[0] == t_lo:
                lo = mid
            else:
                hi = mid
        cuts.append(0.5 * (lo + hi))
    return [-_Z1_MAX, *cuts, _Z1_MAX]


def _bisect_threshold(
    z1: np.ndarray, x: float, alpha: float, beta2: float, increasing: np.ndarray
) -> np.ndarray:
    """Solve G(z1, t) = x for t by bisection, vectorized over z1 nodes."""
    lo = np.full(z1.shape, -_Z2_MAX)
    hi = np.full(z1.shape, _Z2_MAX)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        inside = _transform(z1, mid, alpha, beta2) <= x
        grow = np.where(increasing, inside, ~inside)
        lo = np.where(grow, mid, lo)
        hi = np.where(grow, hi, mid)
    return 0.5 * (lo + hi)


@lru_cache(maxsize=16)
def _gauss_legendre(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    xg, wg = leggauss(nodes)
    xg.flags.writeable = False
    wg.flags.writeable = False
    return xg, wg


def _oracle_estimate(
    m1: int, m2: int, x: float, alpha: float, beta2: float, nodes: int,
    bounds: list[float],
) -> float:
    xg, wg = _gauss_legendre(nodes)
    full_inner = 1.0 if m2 == 0 else 0.0
    total = 0.0
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        if hi - lo < 1e-13:
            continue
        piece_type = int(
            _section_types(np.array([0.5 * (lo + hi)]), x, alpha, beta2)[0]
        )
        if piece_type == _ALL_OUT:
            continue
        z = 0.5 * (hi - lo) * xg + 0.5 * (hi + lo)
        w = 0.5 * (hi - lo) * wg
        if piece_type == _ALL_IN:
            inner = full_inner
        else:
            increasing = np.full(z.shape, piece_type == _INCREASING)
            t = _bisect_threshold(z, x, alpha, beta2, increasing)
            if piece_type == _INCREASING:
                # inside set is z2 <= t
                inner = full_inner - _hermite_upper_tail(m2, t)
            else:
                inner = _hermite_upper_tail(m2, t)
        total += float(np.sum(w * hermite_poly(m1, z) * inner * _phi(z)))
    return total


def j_oracle(
    m1: int,
    m2: int,
    x: float,
    alpha: float,
    beta2: float,
    nodes: int = 256,
    tol: float = 1e-6,
) -> float:
    """Brute-force estimate of E[1{G(Z1,Z2) <= x} H_{m1}(Z1) H_{m2}(Z2)].

    Independent of the closed-form coefficient integrals: the transform is
    treated as a black box.  For each z1 node the z2 half-line section of
    the indicator is located by bisection on G (monotone in z2), its
    Gaussian-weighted Hermite integral is evaluated with the exact tail
    identity int_t^inf H_m phi = H_{m-1}(t) phi(t), and the outer z1
    integral uses piecewise Gauss-Legendre split where the section type
    switches.  Convergence is certified by doubling the node count.
    """
    if m1 < 0 or m2 < 0:
        raise DomainError("Hermite orders must be nonnegative")
    if nodes < 64:
        raise ValueError("nodes must be >= 64")
    _validate_b_params(alpha, beta2)
    bounds = _section_switches(x, alpha, beta2)
    coarse = _oracle_estimate(m1, m2, x, alpha, beta2, nodes, bounds)
    fine = _oracle_estimate(m1, m2, x, alpha, beta2, 2 * nodes, bounds)
    if abs(fine - coarse) > tol:
        raise NonConvergence(
            f"node doubling moved the estimate by {abs(fine - coarse):.3e} > {tol:.0e}"
        )
    return fine


def hermite_rank(x: float, alpha: float, beta2: float, tol: float = 1e-6) -> int:
    """Smallest total order q with some |J_{m1,m2}(x)| > tol, searched to q = 3."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    quad_tol = min(tol / 10.0, 1e-8)
    if abs(j10(x, alpha, beta2, quad_tol)) > tol or abs(j01(x, alpha, beta2, quad_tol)) > tol:
        return 1
    for q in (2, 3):
        for idx in (HermiteIndex(m1, q - m1) for m1 in range(q + 1)):
            if abs(j_oracle(idx.m1, idx.m2, x, alpha, beta2)) > tol:
                return q
    raise RankUndetermined(
        f"all coefficients up to order 3 below {tol:.0e} at x={x}"
    )


# --------------------------------------------------------------------------
# LRD normalization constants
# --------------------------------------------------------------------------


def c_md(m: int, d: float) -> float:
    """Variance constant c(m, D) = 2 / ((1 - mD)(2 - mD)), for 0 < D < 1/m."""
    if m < 1:
        raise DomainError("rank m must be >= 1")
    if not 0.0 < d or m * d >= 1.0:
        raise DomainError(f"need 0 < D < 1/m, got m={m}, D={d}")
    return 2.0 / ((1.0 - m * d) * (2.0 - m * d))


def sigma2_nq(model: LrdModel, n: int, q: int) -> float:
    """Exact (1/n^2) sum_{i,j} r^q(|i-j|), reduced to an O(n) sum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if q < 1:
        raise ValueError("q must be >= 1")
    if n == 1:
        return 1.0
    k = np.arange(1, n)
    r = autocovariance(model, k)
    return float((n + 2.0 * np.sum((n - k) * r**q)) / (n * n))


def d_nm(m: int, d: float, n: int, l_at_n: float) -> float:
    """Normalization d_{n,m} = sqrt(c(m,D) n^{-mD} L(n)^m)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if l_at_n <= 0:
        raise ValueError("slowly varying value must be positive")
    return math.sqrt(c_md(m, d) * float(n) ** (-m * d) * l_at_n**m)


def lrd_normalization(
    model: LrdModel, n: int, m: int = 1, include_exact: bool = False
) -> LrdNormalization:
    """Bundle the rank-m normalization quantities for sample size n."""
    c = c_md(m, model.d)
    dn = d_nm(m, model.d, n, slowly_varying(model, n))
    sigma2 = sigma2_nq(model, n, m) if include_exact else None
    return LrdNormalization(m=m, d=model.d, n=n, c_md=c, d_nm=dn, sigma2_exact=sigma2)


# --------------------------------------------------------------------------
# coefficient supremum c0 and coefficient tables
# --------------------------------------------------------------------------

_C0_BOUNDARY_TOL = 1e-6
# heavy tails: |J| ~ |x|^(-alpha/2), so the 1e-6 boundary can sit at ~1e13
_C0_XMAX_CEILING = 1e16
_c0_memory: dict[tuple, C0Result] = {}


def _coeff_norm(x: float, alpha: float, beta2: float, tol: float) -> float:
    return math.hypot(j10(x, alpha, beta2, tol), j01(x, alpha, beta2, tol))


def _c0_grid(x_max: float, points: int) -> np.ndarray:
    center = min(5.0, x_max)
    xs = np.linspace(-center, center, points)
    if x_max > center:
        tail = np.geomspace(center, x_max, max(points // 2, 8))
        xs = np.concatenate([-tail, xs, tail])
    return np.unique(xs)


def c0(
    alpha: float,
    beta2: float,
    x_max: float = 50.0,
    points: int = 101,
    tol: float = 1e-8,
    cache_dir: str | None = None,
) -> C0Result:
    """Supremum over x of sqrt(J_{1,0}(x)^2 + J_{0,1}(x)^2).

    The search window grows until both coefficients fall below 1e-6 at the
    boundary (heavy tails make a fixed window unsafe); the grid maximum is
    then refined by bounded scalar minimization between its neighbors.
    """
    key = (float(alpha), float(beta2), float(x_max), int(points), float(tol))
    if key in _c0_memory:
        result = _c0_memory[key]
        if cache_dir is not None:
            _c0_disk_store(cache_dir, key, result)
        return result
    if cache_dir is not None:
        cached = _c0_disk_load(cache_dir, key)
        if cached is not None:
            _c0_memory[key] = cached
            return cached

    _validate_b_params(alpha, beta2)
    while (
        _coeff_norm(x_max, alpha, beta2, tol) > _C0_BOUNDARY_TOL
        or _coeff_norm(-x_max, alpha, beta2, tol) > _C0_BOUNDARY_TOL
    ):
        x_max *= 2.0
        if x_max > _C0_XMAX_CEILING:
            raise QuadratureFailure("coefficient sup search window ran away")

    xs = _c0_grid(x_max, points)
    vals = np.array([_coeff_norm(float(v), alpha, beta2, tol) for v in xs])
    i = int(vals.argmax())
    lo = float(xs[max(i - 1, 0)])
    hi = float(xs[min(i + 1, xs.size - 1)])
    refined = minimize_scalar(
        lambda v: -_coeff_norm(float(v), alpha, beta2, tol),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-8},
    )
    if -refined.fun >= vals[i]:
        result = C0Result(value=float(-refined.fun), x=float(refined.x), x_max=x_max)
    else:
        result = C0Result(value=float(vals[i]), x=float(xs[i]), x_max=x_max)
    _c0_memory[key] = result
    if cache_dir is not None:
        _c0_disk_store(cache_dir, key, result)
    return result


def coeff_table(
    alpha: float,
    beta2: float,
    xs,
    tol: float = 1e-8,
    cache_dir: str | None = None,
) -> CoeffTable:
    """Evaluate (J_{1,0}, J_{0,1}) with error estimates on an x-grid."""
    xs = np.asarray(xs, dtype=float)
    key_payload = (float(alpha), float(beta2), xs.tobytes(), float(tol))
    if cache_dir is not None:
        cached = _table_disk_load(cache_dir, key_payload, alpha, beta2, xs, tol)
        if cached is not None:
            return cached
    vals10 = np.empty_like(xs)
    vals01 = np.empty_like(xs)
    errs10 = np.empty_like(xs)
    errs01 = np.empty_like(xs)
    for i, x in enumerate(xs):
        vals10[i], errs10[i] = _j10_with_err(float(x), alpha, beta2, tol)
        vals01[i], errs01[i] = _j01_with_err(float(x), alpha, beta2, tol)
    table = CoeffTable(
        alpha=alpha, beta2=beta2, xs=xs, j10=vals10, j01=vals01,
        err10=errs10, err01=errs01, tol=tol,
    )
    if cache_dir is not None:
        _table_disk_store(cache_dir, key_payload, table)
    return table


# -- tiny JSON disk cache (single-writer contract: last write wins) --------


def _cache_path(cache_dir: str, kind: str, payload: tuple) -> str:
    blob = repr(payload).encode()
    digest = hashlib.sha256(blob).hexdigest()[:24]
    return os.path.join(cache_dir, f"{kind}_{digest}.json")


def _c0_disk_load(cache_dir: str, key: tuple) -> C0Result | None:
    path = _cache_path(cache_dir, "c0", key)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    return C0Result(value=data["value"], x=data["x"], x_max=data["x_max"])


def _c0_disk_store(cache_dir: str, key: tuple, result: C0Result) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, "c0", key)
    with open(path, "w") as fh:
        json.dump({"value": result.value, "x": result.x, "x_max": result.x_max}, fh)


def _table_disk_load(cache_dir, payload, alpha, beta2, xs, tol) -> CoeffTable | None:
    path = _cache_path(cache_dir, "coeffs", payload)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    return CoeffTable(
        alpha=alpha,
        beta2=beta2,
        xs=xs,
        j10=np.array(data["j10"]),
        j01=np.array(data["j01"]),
        err10=np.array(data["err10"]),
        err01=np.array(data["err01"]),
        tol=tol,
    )


def _table_disk_store(cache_dir, payload, table: CoeffTable) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, "coeffs", payload)
    with open(path, "w") as fh:
        json.dump(
            {
                "j10": table.j10.tolist(),
                "j01": table.j01.tolist(),
                "err10": table.err10.tolist(),
                "err01": table.err01.tolist(),
            },
            fh,
        )
