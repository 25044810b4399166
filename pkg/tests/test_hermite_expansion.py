"""Validation of expansion coefficients, the oracle, and LRD constants.

The closed-form coefficient integrals are checked point-by-point against
the brute-force expectation oracle (black-box section inversion plus exact
Hermite tail integrals), including the symmetry reductions for negative
arguments; the normalization constants are checked against hand sums,
an O(n^2) brute-force double sum, and their stated asymptotics.
"""

import math

import numpy as np
import pytest

from stablelrd import (
    DomainError,
    HermiteIndex,
    LrdModel,
    NonConvergence,
    RankUndetermined,
    a1_gamma,
    a_gamma,
    autocovariance,
    c0,
    c_md,
    coeff_table,
    d_nm,
    gamma0,
    hermite_poly,
    hermite_rank,
    j01,
    j10,
    j_oracle,
    lrd_normalization,
    sigma2_nq,
    slowly_varying,
)

TABLE_PARAMS = [(0.5, 0.5), (1.0, 0.0), (1.5, 0.8)]
INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


class TestHermitePoly:
    def test_order_zero_is_one(self):
        assert hermite_poly(0, 3.7) == 1.0

    def test_order_one_is_identity(self):
        assert hermite_poly(1, 2.5) == 2.5

    def test_order_three(self):
        # u^3 - 3u at u = 2
        assert hermite_poly(3, 2.0) == pytest.approx(2.0, abs=1e-14)

    def test_recurrence_against_numpy(self):
        u = np.linspace(-4, 4, 41)
        for m in range(7):
            coeffs = np.zeros(m + 1)
            coeffs[m] = 1.0
            ref = np.polynomial.hermite_e.hermeval(u, coeffs)
            assert np.allclose(hermite_poly(m, u), ref, atol=1e-12)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            hermite_poly(-1, 0.0)


class TestKernels:
    def test_a_gamma_vanishes_at_lower_end(self):
        # alpha = 1/2, beta2 = 0: a(g) = sin(g/2)cos(g/2)/cos(g)^2 -> 0
        vals = a_gamma(np.array([1e-8, 1e-6, 1e-4]), 0.5, 0.0)
        assert np.all(np.diff(vals) > 0) and vals[0] < 1e-7

    def test_a_gamma_diverges_at_upper_end(self):
        g = math.pi / 2 - np.array([1e-2, 1e-4, 1e-6])
        vals = a_gamma(g, 0.5, 0.0)
        assert np.all(np.diff(vals) > 0) and vals[-1] > 1e10

    @pytest.mark.parametrize("alpha,beta2", [(0.5, 0.5), (1.5, 0.8)])
    def test_a_gamma_positive_on_interior_grid(self, alpha, beta2):
        g0 = gamma0(alpha, beta2)
        grid = g0 + (math.pi / 2 - g0) * np.linspace(0.01, 0.99, 50)
        assert np.all(a_gamma(grid, alpha, g0) > 0.0)

    def test_a_gamma_domain_errors(self):
        with pytest.raises(DomainError):
            a_gamma(0.5, 1.0, 0.0)  # alpha = 1 excluded
        g0 = gamma0(0.5, 0.5)
        with pytest.raises(DomainError):
            a_gamma(g0 - 0.1, 0.5, g0)
        with pytest.raises(DomainError):
            a_gamma(math.pi / 2, 0.5, g0)

    def test_a1_gamma_center_value(self):
        assert a1_gamma(0.0, 0.5) == pytest.approx(math.pi / 2, abs=1e-14)

    def test_a1_gamma_limits(self):
        assert a1_gamma(math.pi / 2 - 1e-6, 0.5) > 1e10
        assert a1_gamma(-math.pi / 2 + 1e-6, 0.5) < 1e-10

    def test_a1_gamma_domain_errors(self):
        with pytest.raises(DomainError):
            a1_gamma(0.0, 0.0)
        with pytest.raises(DomainError):
            a1_gamma(math.pi / 2, 0.5)


class TestFirstOrderCoefficients:
    def test_symmetric_cauchy_at_zero(self):
        assert j10(0.0, 1.0, 0.0) == pytest.approx(-INV_SQRT_2PI, abs=1e-12)

    def test_low_alpha_at_zero_is_negative_density(self):
        # -phi(Phi^{-1}(1/4)) for gamma0 = -pi/4
        from scipy import special

        expected = -math.exp(-0.5 * special.ndtri(0.25) ** 2) / math.sqrt(2 * math.pi)
        assert j10(0.0, 0.5, 0.5) == pytest.approx(expected, abs=1e-12)

    def test_j01_zeros(self):
        assert j01(0.0, 0.5, 0.5) == 0.0
        for x in (-3.0, 0.0, 2.0):
            assert j01(x, 1.0, 0.0) == 0.0

    def test_tail_decay(self):
        # heavy tails make the decay polynomial, |J| ~ |x|^(-alpha/2)
        assert abs(j10(1e8, 0.5, 0.5)) < 1e-3
        assert abs(j10(200.0, 1.0, 0.0)) < 1e-2
        assert abs(j10(200.0, 1.5, 0.8)) < 1e-3
        assert abs(j10(-200.0, 1.5, 0.8)) < 1e-3

    @pytest.mark.parametrize("alpha,beta2", TABLE_PARAMS)
    @pytest.mark.parametrize("x", [-2.0, -1.0, 0.0, 1.0, 2.0])
    def test_matches_oracle(self, alpha, beta2, x):
        tol = 1e-8
        d10 = abs(j10(x, alpha, beta2, tol) - j_oracle(1, 0, x, alpha, beta2))
        d01 = abs(j01(x, alpha, beta2, tol) - j_oracle(0, 1, x, alpha, beta2))
        bound = max(10 * tol, 1e-5)
        assert d10 <= bound, f"j10 off oracle by {d10:.2e}"
        assert d01 <= bound, f"j01 off oracle by {d01:.2e}"

    @pytest.mark.parametrize("alpha,beta2", TABLE_PARAMS)
    def test_negative_argument_reduction_matches_oracle(self, alpha, beta2):
        # the x < 0 (beta2 < 0 at alpha = 1) code path re-enters the
        # positive-case formulas; both must still track the oracle
        for x in (-1.5, -0.5):
            assert j10(x, alpha, beta2) == pytest.approx(
                j_oracle(1, 0, x, alpha, beta2), abs=1e-5
            )
            assert j01(x, alpha, beta2) == pytest.approx(
                j_oracle(0, 1, x, alpha, beta2), abs=1e-5
            )

    def test_reduction_is_same_code_path_identity(self):
        # J10(x, b) == J10(-x, -b) and J01(x, b) == -J01(-x, -b), exactly
        for alpha, beta2 in [(0.5, 0.5), (1.5, 0.8)]:
            for x in (-2.0, -0.7):
                assert j10(x, alpha, beta2) == j10(-x, alpha, -beta2)
                assert j01(x, alpha, beta2) == -j01(-x, alpha, -beta2)
        assert j10(-1.0, 1.0, 0.5) == j10(1.0, 1.0, -0.5)

    def test_boundary_continuity_low_alpha(self):
        # 0 < alpha < 1: x -> 0+ limits agree with the x = 0 closed values
        target10 = j10(0.0, 0.5, 0.5)
        assert abs(j10(1e-6, 0.5, 0.5) - target10) < 1e-4
        assert abs(j01(1e-6, 0.5, 0.5)) < 1e-4

    def test_boundary_continuity_across_alpha_regimes_at_zero(self):
        # at x = 0 the two alpha != 1 regimes share the closed value
        from scipy import special

        for alpha, beta2 in [(0.5, 0.5), (1.5, 0.8)]:
            g0 = gamma0(alpha, beta2)
            z0 = special.ndtri((g0 + math.pi / 2) / math.pi)
            expected = -math.exp(-0.5 * z0 * z0) / math.sqrt(2 * math.pi)
            assert j10(0.0, alpha, beta2) == pytest.approx(expected, abs=1e-9)

    def test_rejects_bad_parameters(self):
        with pytest.raises(DomainError):
            j10(0.0, 2.0, 0.0)
        with pytest.raises(ValueError):
            j10(0.0, 1.5, 0.8, tol=-1.0)


class TestOracle:
    def test_cdf_identity_order_zero(self):
        # J_{0,0} equals the stable CDF
        from stablelrd import stable_cdf

        for alpha, beta2 in TABLE_PARAMS:
            for x in (-1.0, 0.5):
                assert j_oracle(0, 0, x, alpha, beta2) == pytest.approx(
                    stable_cdf(x, alpha, beta2), abs=1e-4
                )

    def test_indicator_vanishes_far_left(self):
        assert abs(j_oracle(1, 0, -1e9, 1.5, 0.8)) < 1e-10

    def test_higher_order_finite(self):
        value = j_oracle(2, 0, 0.0, 1.0, 0.0)
        assert np.isfinite(value)

    def test_node_floor(self):
        with pytest.raises(ValueError):
            j_oracle(1, 0, 0.0, 0.5, 0.5, nodes=32)

    def test_convergence_guard_trips_on_absurd_tolerance(self):
        with pytest.raises(NonConvergence):
            j_oracle(1, 0, 1.0, 0.5, 0.5, nodes=64, tol=1e-18)


class TestHermiteRank:
    def test_rank_one_at_symmetric_zero(self):
        assert hermite_rank(0.0, 1.0, 0.0) == 1

    def test_rank_one_where_j01_vanishes(self):
        # J01(0) = 0 but J10(0) != 0
        assert hermite_rank(0.0, 0.5, 0.5) == 1

    @pytest.mark.parametrize("alpha,beta2", TABLE_PARAMS)
    def test_rank_one_on_coarse_grid(self, alpha, beta2):
        for x in np.linspace(-10, 10, 11):
            assert hermite_rank(float(x), alpha, beta2) == 1

    def test_undetermined_when_tolerance_is_huge(self):
        with pytest.raises(RankUndetermined):
            hermite_rank(0.0, 1.0, 0.0, tol=10.0)

    def test_index_type(self):
        idx = HermiteIndex(2, 1)
        assert idx.total == 3
        with pytest.raises(ValueError):
            HermiteIndex(-1, 0)


class TestVarianceConstants:
    def test_c_md_values(self):
        assert c_md(1, 0.5) == pytest.approx(8.0 / 3.0, rel=1e-15)
        assert c_md(1, 1e-9) == pytest.approx(1.0, rel=1e-6)

    def test_c_md_domain(self):
        with pytest.raises(DomainError):
            c_md(2, 0.6)
        with pytest.raises(DomainError):
            c_md(0, 0.5)

    def test_sigma2_single_point(self):
        assert sigma2_nq(LrdModel(0.5), 1, 1) == 1.0

    def test_sigma2_hand_sum_n2(self):
        expected = (2.0 + 2.0 * 2.0 ** -0.25) / 4.0
        assert sigma2_nq(LrdModel(0.5), 2, 1) == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("d,q", [(0.2, 1), (0.5, 1), (0.8, 2), (0.35, 3)])
    def test_sigma2_against_brute_double_sum(self, d, q):
        model = LrdModel(d)
        for n in (2, 3, 7, 25):
            i, j = np.meshgrid(np.arange(n), np.arange(n))
            brute = autocovariance(model, np.abs(i - j)) ** q
            assert sigma2_nq(model, n, q) == pytest.approx(
                brute.sum() / n**2, rel=1e-13
            )

    @pytest.mark.parametrize("d", [0.2, 0.5, 0.8])
    def test_sigma2_asymptotics_vs_dnm(self, d):
        model = LrdModel(d)
        ratios = []
        for exp in range(7, 15):
            n = 2**exp
            dn2 = d_nm(1, d, n, slowly_varying(model, n)) ** 2
            ratios.append(sigma2_nq(model, n, 1) / dn2)
        gaps = np.abs(np.array(ratios) - 1.0)
        assert np.all(np.diff(gaps) < 0), f"|ratio-1| not decreasing: {ratios}"
        assert 0.8 < ratios[-1] < 1.25

    def test_d_nm_direct_value(self):
        l1 = slowly_varying(LrdModel(0.5), 1)
        assert l1 == pytest.approx(2.0 ** -0.25, rel=1e-15)
        assert d_nm(1, 0.5, 1, l1) == pytest.approx(
            math.sqrt(8.0 / 3.0 * 2.0 ** -0.25), rel=1e-15
        )

    def test_d_nm_approaches_pure_power_law(self):
        d = 0.4
        for n in (10**3, 10**6):
            model = LrdModel(d)
            dn2 = d_nm(1, d, n, slowly_varying(model, n)) ** 2
            assert dn2 == pytest.approx(c_md(1, d) * n ** (-d), rel=1e-3)

    def test_d_nm_domain(self):
        with pytest.raises(DomainError):
            d_nm(2, 0.6, 100, 1.0)
        with pytest.raises(ValueError):
            d_nm(1, 0.5, 0, 1.0)

    def test_normalization_bundle(self):
        model = LrdModel(0.8)
        norm = lrd_normalization(model, 2048, include_exact=True)
        assert norm.c_md == pytest.approx(c_md(1, 0.8))
        assert norm.d_nm == pytest.approx(
            d_nm(1, 0.8, 2048, slowly_varying(model, 2048))
        )
        assert norm.sigma2_exact == pytest.approx(sigma2_nq(model, 2048, 1))


class TestCoefficientSup:
    def test_symmetric_cauchy_closed_form(self):
        result = c0(1.0, 0.0)
        assert result.value == pytest.approx(INV_SQRT_2PI, abs=1e-5)
        assert abs(result.x) < 1e-3

    def test_grid_doubling_stability(self):
        coarse = c0(0.5, 0.5, points=101)
        fine = c0(0.5, 0.5, points=201)
        assert abs(coarse.value - fine.value) < 1e-4

    def test_positive_and_attained_on_window(self):
        for alpha, beta2 in TABLE_PARAMS:
            result = c0(alpha, beta2)
            assert 0.0 < result.value < 1.0
            assert abs(result.x) <= result.x_max

    def test_disk_cache_round_trip(self, tmp_path):
        first = c0(1.5, 0.8, cache_dir=str(tmp_path))
        files = list(tmp_path.glob("c0_*.json"))
        assert len(files) == 1
        # force the in-memory cache aside by reading through the disk layer
        from stablelrd.hermite_expansion import _c0_memory

        _c0_memory.clear()
        again = c0(1.5, 0.8, cache_dir=str(tmp_path))
        assert again == first


class TestCoeffTable:
    def test_columns_and_error_bounds(self):
        xs = np.linspace(-2, 2, 9)
        table = coeff_table(1.5, 0.8, xs, tol=1e-8)
        assert table.xs.shape == table.j10.shape == table.j01.shape
        assert np.all(table.err10 <= 1e-8) and np.all(table.err01 <= 1e-8)
        for i, x in enumerate(xs):
            assert table.j10[i] == pytest.approx(j10(float(x), 1.5, 0.8), abs=1e-10)

    def test_requires_increasing_grid(self):
        with pytest.raises(ValueError):
            coeff_table(1.0, 0.0, np.array([0.0, 0.0, 1.0]))

    def test_disk_cache_round_trip(self, tmp_path):
        xs = np.linspace(-1, 1, 5)
        first = coeff_table(0.5, 0.5, xs, cache_dir=str(tmp_path))
        assert list(tmp_path.glob("coeffs_*.json"))
        again = coeff_table(0.5, 0.5, xs, cache_dir=str(tmp_path))
        assert np.array_equal(first.j10, again.j10)
        assert np.array_equal(first.err01, again.err01)
