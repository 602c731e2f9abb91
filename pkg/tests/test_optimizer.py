"""Tests for the max-Sharpe optimizer and covariance shrinkage."""

from __future__ import annotations

import numpy as np
import pytest
from sklearn.covariance import ledoit_wolf

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import SingularSystemError
from hpcakit.portfolio import max_sharpe, shrink_covariance, shrinkage_intensity
from hpcakit.types.config import OptimizerConfig

EXACT = OptimizerConfig(ridge=0.0)


class TestMaxSharpe:
    def test_identity_covariance(self) -> None:
        w = max_sharpe(np.array([1.0, 2.0]), np.eye(2), EXACT)
        np.testing.assert_allclose(w.weights, [1 / 3, 2 / 3], atol=1e-12)
        assert w.gross == pytest.approx(1.0)

    def test_diagonal_covariance(self) -> None:
        w = max_sharpe(np.ones(3), np.diag([1.0, 4.0, 9.0]), EXACT)
        raw = np.array([1.0, 1 / 4, 1 / 9])
        np.testing.assert_allclose(w.weights, raw / raw.sum(), atol=1e-12)

    def test_scale_invariant(self, rng) -> None:
        a = rng.standard_normal((50, 4))
        sigma = a.T @ a / 50
        mu = rng.normal(0.001, 0.001, 4)
        base = max_sharpe(mu, sigma, EXACT).weights
        np.testing.assert_allclose(max_sharpe(3 * mu, sigma, EXACT).weights, base, atol=1e-12)
        np.testing.assert_allclose(max_sharpe(mu, 5 * sigma, EXACT).weights, base, atol=1e-12)

    def test_long_short(self) -> None:
        w = max_sharpe(np.array([1.0, -1.0]), np.eye(2), EXACT)
        np.testing.assert_allclose(w.weights, [0.5, -0.5], atol=1e-12)
        assert w.net == pytest.approx(0.0)

    def test_long_only_clips(self, recording_logger) -> None:
        config = OptimizerConfig(long_only=True, ridge=0.0)
        w = max_sharpe(np.array([1.0, -1.0]), np.eye(2), config, logger=recording_logger)
        assert w.weights.tolist() == [1.0, 0.0]
        assert w.clipped == 1
        assert recording_logger.messages("info")

    def test_long_only_nothing_left(self) -> None:
        config = OptimizerConfig(long_only=True, ridge=0.0)
        with pytest.raises(SingularSystemError):
            max_sharpe(np.array([-1.0, -2.0]), np.eye(2), config)

    def test_singular_without_ridge(self) -> None:
        with pytest.raises(SingularSystemError) as exc_info:
            max_sharpe(np.array([1.0, 2.0]), np.zeros((2, 2)), EXACT)
        assert exc_info.value.exit_code == 2

    def test_ridge_regularizes(self) -> None:
        w = max_sharpe(np.array([1.0, 2.0, 3.0]), np.ones((3, 3)), OptimizerConfig(ridge=1e-6))
        assert np.all(np.isfinite(w.weights))
        assert w.gross == pytest.approx(1.0)

    def test_zero_expected_returns(self) -> None:
        with pytest.raises(HpcaError) as exc_info:
            max_sharpe(np.zeros(2), np.eye(2))
        assert exc_info.value.code == ErrorCode.VALIDATION_OUT_OF_RANGE
        assert exc_info.value.exit_code == 1

    def test_shape_mismatch(self) -> None:
        with pytest.raises(HpcaError):
            max_sharpe(np.ones(2), np.eye(3))

    def test_labels(self) -> None:
        w = max_sharpe(np.ones(2), np.eye(2), tickers=["X", "Y"])
        assert w.to_series().index.tolist() == ["X", "Y"]


class TestShrinkage:
    SAMPLE = np.array([[1.0, 1.0], [1.0, 3.0]])

    def test_zero_intensity(self) -> None:
        np.testing.assert_array_equal(shrink_covariance(self.SAMPLE, 0.0), self.SAMPLE)

    def test_full_intensity(self) -> None:
        np.testing.assert_allclose(shrink_covariance(self.SAMPLE, 1.0), 2.0 * np.eye(2))

    def test_half_intensity(self) -> None:
        np.testing.assert_allclose(
            shrink_covariance(self.SAMPLE, 0.5), [[1.5, 0.5], [0.5, 2.5]], atol=1e-15
        )

    def test_automatic_matches_ledoit_wolf(self, rng) -> None:
        x = rng.standard_normal((60, 5)) @ rng.standard_normal((5, 5))
        sample = np.cov(x, rowvar=False, bias=True)
        shrunk, delta = ledoit_wolf(x)
        assert shrinkage_intensity(x) == pytest.approx(delta, abs=1e-12)
        np.testing.assert_allclose(shrink_covariance(sample, "auto", returns=x), shrunk, atol=1e-12)

    def test_invalid_intensity(self) -> None:
        for intensity in (1.5, -0.1, "often"):
            with pytest.raises(HpcaError):
                shrink_covariance(self.SAMPLE, intensity)

    def test_auto_needs_returns(self) -> None:
        with pytest.raises(HpcaError):
            shrink_covariance(self.SAMPLE, "auto")
