"""Tests for the seeded synthetic generators."""

from __future__ import annotations

import numpy as np
import pytest

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.pca.engine import correlation_matrix
from hpcakit.synthetic import (
    block_correlation,
    equicorrelated,
    exact_panel,
    hierarchical_panel,
    random_correlation,
)


class TestHierarchicalPanel:
    def test_shape_and_labels(self) -> None:
        universe = hierarchical_panel(clusters=2, per_cluster=3, periods=50, countries=2)
        assert universe.prices.prices.shape == (51, 6)
        assert universe.prices.tickers[0] == "S01A001"
        assert [m.sector for m in universe.meta] == ["Sector 1"] * 3 + ["Sector 2"] * 3
        assert [m.country for m in universe.meta[:3]] == ["Country 1", "Country 2", "Country 1"]
        np.testing.assert_allclose(universe.prices.prices[0], 100.0)

    def test_seeded(self) -> None:
        first = hierarchical_panel(clusters=2, per_cluster=3, periods=50, seed=11)
        second = hierarchical_panel(clusters=2, per_cluster=3, periods=50, seed=11)
        other = hierarchical_panel(clusters=2, per_cluster=3, periods=50, seed=12)
        assert np.array_equal(first.prices.prices, second.prices.prices)
        assert not np.array_equal(first.prices.prices, other.prices.prices)

    def test_within_cluster_correlation_is_higher(self, panel) -> None:
        c = correlation_matrix(panel).values
        labels = np.repeat(np.arange(3), 6)
        same = labels[:, None] == labels[None, :]
        off_diagonal = ~np.eye(18, dtype=bool)
        assert c[same & off_diagonal].mean() > c[~same].mean() + 0.1

    def test_country_factor_splits(self) -> None:
        universe = hierarchical_panel(
            clusters=1, per_cluster=20, periods=2000,
            global_strength=0.0, cluster_strength=0.0, country_strength=1.0, noise=0.5, seed=2,
        )
        prices = universe.prices.prices
        returns = np.diff(np.log(prices), axis=0)
        c = np.corrcoef(returns, rowvar=False)
        assert c[0, 2] > 0.5
        assert c[0, 1] < -0.5

    def test_rejects_empty(self) -> None:
        with pytest.raises(HpcaError):
            hierarchical_panel(clusters=0)


class TestCorrelationGenerators:
    def test_equicorrelated(self) -> None:
        c = equicorrelated(4, 0.3)
        assert np.linalg.eigvalsh(c)[-1] == pytest.approx(1 + 3 * 0.3)
        np.testing.assert_allclose(np.diag(c), 1.0)

    def test_block_correlation(self) -> None:
        c = block_correlation([2, 3], within=0.7, between=0.1)
        assert c.shape == (5, 5)
        assert c[0, 1] == 0.7
        assert c[2, 4] == 0.7
        assert c[1, 2] == 0.1
        np.testing.assert_array_equal(np.diag(c), 1.0)

    def test_random_correlation(self, rng) -> None:
        c = random_correlation(6, rng)
        np.testing.assert_array_equal(c, c.T)
        np.testing.assert_array_equal(np.diag(c), 1.0)
        assert np.linalg.eigvalsh(c)[0] > -1e-12
        assert np.all(np.abs(c) <= 1.0 + 1e-12)

    def test_positive_entries(self, rng) -> None:
        assert np.all(random_correlation(5, rng, positive=True) > 0)

    def test_low_rank(self, rng) -> None:
        c = random_correlation(6, rng, rank=2)
        assert np.linalg.matrix_rank(c, tol=1e-10) == 2


class TestExactPanel:
    def test_reproduces_matrix(self) -> None:
        target = block_correlation([3, 3], within=0.6, between=0.2)
        panel = exact_panel(target, periods=50, seed=1)
        np.testing.assert_allclose(correlation_matrix(panel).values, target, atol=1e-10)
        assert panel.n_periods == 50

    def test_needs_more_periods(self) -> None:
        with pytest.raises(HpcaError):
            exact_panel(np.eye(4), periods=4)
