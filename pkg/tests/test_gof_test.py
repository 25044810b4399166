"""Validation of the half-normal calibration and test decisions."""

import math

import numpy as np
import pytest

from stablelrd import (
    HALF_NORMAL_MEAN,
    HALF_NORMAL_SD,
    DegenerateSample,
    Sample,
    TabulatedStableCdf,
    cms_g0,
    half_normal_cdf,
    half_normal_quantile,
    ks_test,
    standardize_ksd,
)


class TestHalfNormalLaw:
    def test_moments(self):
        assert HALF_NORMAL_MEAN == pytest.approx(0.7979, abs=5e-5)
        assert HALF_NORMAL_SD == pytest.approx(0.6028, abs=5e-5)

    def test_reference_percentiles(self):
        assert half_normal_quantile(0.8) == pytest.approx(1.2816, abs=5e-4)
        assert half_normal_quantile(0.9) == pytest.approx(1.6449, abs=5e-4)
        assert half_normal_quantile(0.95) == pytest.approx(1.959964, abs=1e-5)

    def test_cdf_at_zero(self):
        assert half_normal_cdf(0.0) == 0.0

    @pytest.mark.parametrize("gamma", [0.5, 0.8, 0.9, 0.95, 0.99])
    def test_quantile_cdf_round_trip(self, gamma):
        assert half_normal_cdf(half_normal_quantile(gamma)) == pytest.approx(
            gamma, abs=1e-10
        )

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            half_normal_quantile(0.0)
        with pytest.raises(ValueError):
            half_normal_cdf(-0.1)


@pytest.fixture(scope="module")
def null_sample():
    rng = np.random.default_rng(41)
    n = 512
    draws = cms_g0(rng.standard_normal(n), rng.standard_normal(n), 0.5, 0.5)
    return Sample(draws)


@pytest.fixture(scope="module")
def cdf():
    return TabulatedStableCdf(0.5, 0.5)


class TestKsTest:
    def test_report_invariants(self, null_sample, cdf):
        report = ks_test(null_sample, 0.5, 0.5, 0.8, level=0.05, null_cdf=cdf)
        assert report.kstar == pytest.approx(report.kn / (report.dn * report.c0))
        assert 0.0 <= report.p_value <= 1.0
        assert report.reject == (report.p_value < report.level)

    def test_p_value_anchors(self, null_sample, cdf):
        report = ks_test(null_sample, 0.5, 0.5, 0.8, null_cdf=cdf)
        # p = 1 - (2 Phi(k*) - 1); check the two trivial anchors directly
        assert 1.0 - half_normal_cdf(0.0) == 1.0
        assert 1.0 - half_normal_cdf(1.959964) == pytest.approx(0.05, abs=1e-6)
        assert report.p_value == pytest.approx(1.0 - half_normal_cdf(report.kstar))

    def test_decision_monotone_in_statistic(self, null_sample, cdf):
        report = ks_test(null_sample, 0.5, 0.5, 0.8, level=0.05, null_cdf=cdf)
        stricter = ks_test(null_sample, 0.5, 0.5, 0.8, level=0.9999, null_cdf=cdf)
        # same statistic, looser level can only flip toward rejection
        assert report.kstar == stricter.kstar
        assert (not report.reject) or stricter.reject

    def test_report_serialization(self, null_sample, cdf):
        import json

        report = ks_test(null_sample, 0.5, 0.5, 0.8, null_cdf=cdf)
        payload = json.loads(report.to_json())
        assert set(payload) == {"kn", "dn", "c0", "kstar", "p_value", "reject", "level"}

    def test_level_validated(self, null_sample, cdf):
        with pytest.raises(ValueError):
            ks_test(null_sample, 0.5, 0.5, 0.8, level=1.5, null_cdf=cdf)


class TestStandardizeKsd:
    def test_constant_input_degenerate(self):
        with pytest.raises(DegenerateSample):
            standardize_ksd(np.full(10, 0.3))

    def test_too_short(self):
        with pytest.raises(ValueError):
            standardize_ksd(np.array([1.0]))

    def test_exact_target_moments(self):
        rng = np.random.default_rng(5)
        kstars = np.abs(rng.standard_normal(400)) * 0.5 + 0.9
        out = standardize_ksd(kstars)
        assert out.mean() == pytest.approx(HALF_NORMAL_MEAN, abs=1e-12)
        assert out.std(ddof=1) == pytest.approx(HALF_NORMAL_SD, abs=1e-12)

    def test_affine_shape_preserved(self):
        kstars = np.array([0.1, 0.4, 0.9, 1.6])
        out = standardize_ksd(kstars)
        # affine maps preserve ordering and spacing ratios
        assert np.all(np.diff(out) > 0)
        r_in = (kstars[2] - kstars[0]) / (kstars[3] - kstars[1])
        r_out = (out[2] - out[0]) / (out[3] - out[1])
        assert r_in == pytest.approx(r_out, rel=1e-12)
