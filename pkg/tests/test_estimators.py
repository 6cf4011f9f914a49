import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from levygof.condmoments import QuantileSplit
from levygof.distributions import LevyParams, sample_levy
from levygof.estimators import (EstimationError, TransformedSample,
                                estimate_cov, estimate_mle, estimate_qcm,
                                estimate_qcv)
from levygof.streams import RandomStream


@pytest.fixture(scope="module")
def big_levy2():
    return sample_levy(LevyParams(c=2.0), 10**6, RandomStream(2024))


class TestConsistency:
    def test_qcm(self, big_levy2):
        est = estimate_qcm(big_levy2, QuantileSplit(0.02, 0.48))
        assert est.value == pytest.approx(2.0, abs=0.02)

    def test_qcv(self, big_levy2):
        est = estimate_qcv(big_levy2, QuantileSplit(0.0, 0.7))
        assert est.value == pytest.approx(2.0, abs=0.05)

    def test_mle(self, big_levy2):
        assert estimate_mle(big_levy2).value == pytest.approx(2.0, abs=0.01)

    def test_cov(self, big_levy2):
        assert estimate_cov(big_levy2).value == pytest.approx(2.0, abs=0.05)


SAMPLE = np.array([0.7, 2.3, 0.4, 9.1, 1.6, 5.5, 0.9, 3.2, 12.4, 0.2,
                   1.1, 4.4, 0.6, 2.9, 7.7, 1.9, 0.3, 6.1, 2.2, 3.8])


class TestEquivariance:
    @settings(max_examples=50, deadline=None)
    @given(lam=st.floats(min_value=1e-3, max_value=1e3))
    def test_scale_equivariance_all(self, lam):
        for est in (estimate_qcm, estimate_qcv, estimate_mle, estimate_cov):
            base = est(SAMPLE).value
            assert est(lam * SAMPLE).value == pytest.approx(lam * base, rel=1e-10)

    @settings(max_examples=50, deadline=None)
    @given(mu=st.floats(min_value=-100.0, max_value=100.0))
    def test_qcv_location_invariance(self, mu):
        base = estimate_qcv(SAMPLE).value
        assert estimate_qcv(SAMPLE + mu).value == pytest.approx(base, rel=1e-10)


class TestEdgeCases:
    def test_mle_of_constant_sample(self):
        assert estimate_mle([4.0] * 8).value == pytest.approx(4.0)

    def test_positive_data_required(self):
        for est in (estimate_mle, estimate_cov):
            with pytest.raises(EstimationError):
                est([1.0, -2.0, 3.0])

    def test_tiny_values_rejected(self):
        with pytest.raises(EstimationError):
            TransformedSample([1.0, 1e-310])

    def test_qcv_degenerate(self):
        with pytest.raises(EstimationError):
            estimate_qcv([5.0] * 20, QuantileSplit(0.0, 0.5))

    def test_cov_needs_two(self):
        with pytest.raises(EstimationError):
            estimate_cov([1.0])

    def test_estimates_positive(self):
        for est in (estimate_qcm, estimate_qcv, estimate_mle, estimate_cov):
            assert est(SAMPLE).value > 0.0

    def test_split_recorded(self):
        s = QuantileSplit(0.1, 0.6)
        assert estimate_qcm(SAMPLE, s).split == s
        assert estimate_mle(SAMPLE).split is None
