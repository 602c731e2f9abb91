"""Tests for partitions, cluster PCA, the assembled model and localization."""

from __future__ import annotations

import numpy as np
import pytest

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import (
    EmptyClusterError,
    MissingLabelError,
    NotPositiveSemidefiniteError,
)
from hpcakit.hpca import (
    assemble_hpca,
    cluster_pca,
    fit_hpca,
    inter_cluster_corr,
    localization_label,
    off_block_mean_abs,
    partition,
    verify_gaussian,
)
from hpcakit.hpca.localization import cluster_report, cluster_shares, localization_report
from hpcakit.pca import correlation_matrix, eigendecompose
from hpcakit.returns.transforms import compute_returns, standardize
from hpcakit.synthetic import (
    block_correlation,
    equicorrelated,
    exact_panel,
    hierarchical_panel,
)
from hpcakit.types.cluster import MULTI_CLUSTER, ClusterMap, ClusterPca
from hpcakit.types.panel import AssetMeta

META = [
    AssetMeta("A1", "Tech", "US"),
    AssetMeta("A2", "Tech", "UK"),
    AssetMeta("A3", "Energy", "US"),
    AssetMeta("A4", "Energy", "UK"),
]


def _factor(name: str, values: np.ndarray) -> ClusterPca:
    return ClusterPca(
        name=name,
        indices=np.array([0]),
        lambda1=1.0,
        vector=np.ones(1),
        factor=values,
        betas=np.ones(1),
    )


def _singletons(n: int, periods: int = 200) -> tuple:
    panel = exact_panel(np.eye(n), periods)
    cluster_map = ClusterMap.from_labels(panel.tickers, list(panel.tickers))
    return panel, cluster_map


class TestPartition:
    def test_sector(self) -> None:
        cluster_map = partition(META, "sector")
        assert cluster_map.names == ("Energy", "Tech")
        assert cluster_map.sizes() == {"Energy": 2, "Tech": 2}
        assert cluster_map.labels == ("Tech", "Tech", "Energy", "Energy")

    def test_country(self) -> None:
        cluster_map = partition(META, "country")
        assert set(cluster_map.members("US")) == {0, 2}

    def test_custom_mapping(self) -> None:
        cluster_map = partition(META, {"A1": "x", "A2": "y", "A3": "x", "A4": "y"})
        assert cluster_map.b == 2

    def test_follows_universe_order(self) -> None:
        cluster_map = partition(META, "sector", tickers=["A4", "A1", "A3", "A2"])
        assert cluster_map.tickers == ("A4", "A1", "A3", "A2")
        assert cluster_map.labels == ("Energy", "Tech", "Energy", "Tech")

    def test_missing_label(self) -> None:
        meta = [*META[:3], AssetMeta("A4", "", "UK")]
        with pytest.raises(MissingLabelError) as exc_info:
            partition(meta, "sector")
        assert exc_info.value.ticker == "A4"

    def test_missing_custom_label(self) -> None:
        with pytest.raises(MissingLabelError):
            partition(META, {"A1": "x", "A2": "y", "A3": "x"})

    def test_min_cluster_size(self) -> None:
        meta = [*META[:3], AssetMeta("A4", "Utilities", "UK")]
        with pytest.raises(EmptyClusterError):
            partition(meta, "sector", min_cluster_size=2)

    def test_stat_scheme_rejected(self) -> None:
        with pytest.raises(HpcaError):
            partition(META, "stat")


class TestClusterPca:
    def test_identical_members(self) -> None:
        x = np.array([1.0, -2.0, 0.5, 3.0, -1.0])
        panel = standardize(np.column_stack([x, x]))
        cluster_map = ClusterMap.from_labels(panel.tickers, ["c", "c"])
        (pca,) = cluster_pca(panel, cluster_map)
        assert pca.lambda1 == pytest.approx(2.0, abs=1e-12)
        np.testing.assert_allclose(pca.vector, [1 / np.sqrt(2)] * 2, atol=1e-12)
        np.testing.assert_allclose(pca.betas, [1.0, 1.0], atol=1e-12)

    def test_singleton(self) -> None:
        panel, cluster_map = _singletons(3)
        pcas = cluster_pca(panel, cluster_map)
        for pca in pcas:
            assert pca.betas.tolist() == [1.0]
            np.testing.assert_allclose(pca.factor, panel.returns[:, pca.indices[0]], atol=1e-12)

    def test_factor_is_standardized(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        for pca in cluster_pca(panel, cluster_map):
            assert pca.factor.mean() == pytest.approx(0.0, abs=1e-10)
            assert (pca.factor**2).mean() == pytest.approx(1.0, abs=1e-8)

    def test_betas_are_correlations(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        for pca in cluster_pca(panel, cluster_map):
            members = panel.returns[:, pca.indices]
            corr = members.T @ pca.factor / panel.n_periods
            np.testing.assert_allclose(pca.betas, corr, atol=1e-8)

    def test_rejects_misaligned_map(self, panel) -> None:
        cluster_map = ClusterMap.from_labels(("X", "Y"), ["a", "b"])
        with pytest.raises(HpcaError):
            cluster_pca(panel, cluster_map)


class TestInterClusterCorr:
    def test_identical_factors(self, rng) -> None:
        f = standardize(rng.standard_normal((100, 1))).returns[:, 0]
        rho = inter_cluster_corr([_factor("a", f), _factor("b", f)])
        np.testing.assert_allclose(rho, np.ones((2, 2)), atol=1e-12)

    def test_single_cluster(self, rng) -> None:
        rho = inter_cluster_corr([_factor("a", rng.standard_normal(50))])
        assert rho.tolist() == [[1.0]]

    def test_independent_factors(self, rng) -> None:
        periods = 10_000
        rho = inter_cluster_corr(
            [_factor("a", rng.standard_normal(periods)), _factor("b", rng.standard_normal(periods))]
        )
        assert abs(rho[0, 1]) <= 4 / np.sqrt(periods)

    def test_length_mismatch(self, rng) -> None:
        with pytest.raises(HpcaError):
            inter_cluster_corr([_factor("a", rng.standard_normal(5)), _factor("b", np.ones(6))])


class TestAssembleHpca:
    def test_single_cluster_is_identity_map(self, panel) -> None:
        cluster_map = ClusterMap.from_labels(panel.tickers, ["all"] * panel.n_assets)
        model = fit_hpca(panel, cluster_map)
        assert np.array_equal(model.c_hat, correlation_matrix(panel).values)

    def test_within_blocks_copied(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        codes = cluster_map.codes
        same = codes[:, None] == codes[None, :]
        assert np.array_equal(model.c_hat[same], model.empirical.values[same])

    def test_structure(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        c_hat = model.c_hat
        assert np.array_equal(c_hat, c_hat.T)
        assert np.all(np.diag(c_hat) == 1.0)
        assert np.all(np.abs(c_hat) <= 1.0 + 1e-10)
        assert np.linalg.eigvalsh(c_hat)[0] >= -1e-8
        assert not model.psd_repaired

    def test_cross_entries(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        betas = model.betas
        i, j = 0, panel.n_assets - 1
        a, b = cluster_map.codes[i], cluster_map.codes[j]
        assert model.c_hat[i, j] == pytest.approx(betas[i] * betas[j] * model.rho[a, b])

    def test_zero_factor_correlation(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        pcas = cluster_pca(panel, cluster_map)
        model = assemble_hpca(
            correlation_matrix(panel), pcas, np.eye(cluster_map.b), cluster_map
        )
        codes = cluster_map.codes
        assert np.all(model.c_hat[codes[:, None] != codes[None, :]] == 0.0)

    def test_keeps_factor_direction_covariance(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        first, second = model.pcas[0], model.pcas[1]
        block = np.ix_(first.indices, second.indices)
        empirical = first.vector @ model.empirical.values[block] @ second.vector
        modeled = first.vector @ model.c_hat[block] @ second.vector
        assert modeled == pytest.approx(empirical, abs=1e-10)

    def test_off_block_mean(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        codes = cluster_map.codes
        cross = model.c_hat[codes[:, None] != codes[None, :]]
        assert off_block_mean_abs(model.c_hat, cluster_map) == pytest.approx(
            np.abs(cross).mean()
        )

    def test_cross_cluster_blocks_lighter_than_empirical(self) -> None:
        universe = hierarchical_panel(
            clusters=3, per_cluster=8, periods=1000, global_strength=0.0, seed=11
        )
        panel = standardize(compute_returns(universe.prices))
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        modeled = off_block_mean_abs(model.c_hat, cluster_map)
        empirical = off_block_mean_abs(model.empirical, cluster_map)
        assert modeled < empirical

    def test_inconsistent_factor_correlation(self) -> None:
        panel, cluster_map = _singletons(3)
        rho = np.array([[1.0, 0.9, 0.9], [0.9, 1.0, -0.9], [0.9, -0.9, 1.0]])
        with pytest.raises(NotPositiveSemidefiniteError) as exc_info:
            assemble_hpca(correlation_matrix(panel), cluster_pca(panel, cluster_map), rho,
                          cluster_map)
        assert exc_info.value.module == "hpca"

    def test_small_negative_eigenvalue_repaired(self, recording_logger) -> None:
        panel, cluster_map = _singletons(3)
        rho = equicorrelated(3, -0.5 - 1e-9)
        model = assemble_hpca(
            correlation_matrix(panel),
            cluster_pca(panel, cluster_map),
            rho,
            cluster_map,
            logger=recording_logger,
        )
        assert model.psd_repaired
        assert model.min_eigenvalue < 0
        assert np.all(np.diag(model.c_hat) == 1.0)
        assert np.linalg.eigvalsh(model.c_hat)[0] >= -1e-12
        assert recording_logger.messages("warn")

    def test_round_off_negative_eigenvalue_repaired(self, recording_logger) -> None:
        panel, cluster_map = _singletons(3)
        rho = equicorrelated(3, -0.5 - 1e-11)
        model = assemble_hpca(
            correlation_matrix(panel),
            cluster_pca(panel, cluster_map),
            rho,
            cluster_map,
            logger=recording_logger,
        )
        assert -1e-10 < model.min_eigenvalue < 0
        assert model.psd_repaired
        assert np.all(np.diag(model.c_hat) == 1.0)
        assert np.linalg.eigvalsh(model.c_hat)[0] >= -1e-12
        assert recording_logger.messages("debug")
        assert not recording_logger.messages("warn")

    def test_dimension_mismatch(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        pcas = cluster_pca(panel, cluster_map)
        with pytest.raises(HpcaError):
            assemble_hpca(correlation_matrix(panel), pcas, np.eye(2), cluster_map)

    def test_off_block_without_cross_pairs(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b"), ["x", "x"])
        assert off_block_mean_abs(np.eye(2), cluster_map) == 0.0


class TestLocalization:
    def test_single_cluster_vector(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c"), ["x", "x", "y"])
        v = np.array([0.6, 0.8, 0.0])
        assert localization_label(v, cluster_map) == "x"
        np.testing.assert_allclose(cluster_shares(v, cluster_map), [1.0, 0.0], atol=1e-12)

    def test_even_split_is_multi_cluster(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c", "d"), ["x", "x", "y", "y"])
        assert localization_label(np.full(4, 0.5), cluster_map) == MULTI_CLUSTER

    def test_below_threshold(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c"), ["x", "y", "z"])
        v = np.array([0.7, 0.5, 0.5])
        v /= np.linalg.norm(v)
        assert localization_label(v, cluster_map, threshold=0.6) == MULTI_CLUSTER
        assert localization_label(v, cluster_map, threshold=0.4) == "x"

    def test_invalid_threshold(self) -> None:
        cluster_map = ClusterMap.from_labels(("a",), ["x"])
        with pytest.raises(HpcaError):
            localization_label(np.ones(1), cluster_map, threshold=0.0)

    def test_block_model_second_vector(self) -> None:
        sizes = [6, 6, 6]
        c = block_correlation(sizes, within=0.0, between=0.1)
        labels = np.repeat(np.arange(3), sizes)
        for block, rho in enumerate((0.9, 0.5, 0.2)):
            inside = (labels[:, None] == block) & (labels[None, :] == block)
            c[inside] = rho
        np.fill_diagonal(c, 1.0)

        panel = exact_panel(c, 400)
        cluster_map = ClusterMap.from_labels(panel.tickers, ["A"] * 6 + ["B"] * 6 + ["C"] * 6)
        model = fit_hpca(panel, cluster_map)
        es_hat = eigendecompose(model.model_matrix())
        assert localization_label(es_hat.vector(1), cluster_map) == "A"
        assert localization_label(es_hat.vector(2), cluster_map) == "B"

    def test_report_columns(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        es = eigendecompose(correlation_matrix(panel))
        report = localization_report(es, cluster_map, top=5)
        assert list(report.columns) == ["rank", "eigenvalue", "label", "max_share"]
        assert report["rank"].tolist() == [1, 2, 3, 4, 5]

    def test_cluster_report(self, panel, universe) -> None:
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        report = cluster_report(fit_hpca(panel, cluster_map))
        assert report["n_assets"].tolist() == [6, 6, 6]
        assert np.all((report["lambda1_share"] > 0) & (report["lambda1_share"] <= 1))


class TestVerifyGaussian:
    def test_block_model_passes(self) -> None:
        c_hat = block_correlation([2, 2], within=0.7, between=0.3)
        check = verify_gaussian(c_hat, samples=40_000, seed=0, chunk=15_000)
        assert check.samples == 40_000
        assert check.tolerance == pytest.approx(4 / np.sqrt(40_000))
        assert check.passed

    def test_deterministic(self) -> None:
        c_hat = equicorrelated(3, 0.4)
        first = verify_gaussian(c_hat, samples=5_000, seed=9)
        second = verify_gaussian(c_hat, samples=5_000, seed=9)
        assert first.max_deviation == second.max_deviation

    def test_needs_samples(self) -> None:
        with pytest.raises(HpcaError):
            verify_gaussian(np.eye(2), samples=1)
