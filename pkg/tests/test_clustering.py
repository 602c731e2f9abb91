"""Tests for sign-pattern clustering and cluster composition."""

from __future__ import annotations

import numpy as np
import pytest

from hpcakit.clustering import cluster_composition, sign_clusters, sign_signatures
from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import DataIngestionError
from hpcakit.pca import correlation_matrix, eigendecompose
from hpcakit.returns.transforms import compute_returns, standardize
from hpcakit.synthetic import block_correlation, hierarchical_panel
from hpcakit.types.cluster import ClusterMap
from hpcakit.types.panel import AssetMeta
from hpcakit.types.spectral import EigenSystem


def _groups(cluster_map: ClusterMap) -> set[frozenset[str]]:
    return {
        frozenset(cluster_map.tickers[i] for i in cluster_map.members(name))
        for name in cluster_map.names
    }


class TestSignClusters:
    def test_two_blocks_split_on_second_vector(self) -> None:
        es = eigendecompose(block_correlation([2, 2], within=0.8, between=0.2))
        cluster_map = sign_clusters(es, 1)
        assert _groups(cluster_map) == {frozenset({"A1", "A2"}), frozenset({"A3", "A4"})}

    def test_zero_entry_joins_positive_side(self) -> None:
        s2, s3, s6 = np.sqrt(2), np.sqrt(3), np.sqrt(6)
        vectors = np.array(
            [
                [1 / s3, 1 / s2, 1 / s6],
                [1 / s3, 0.0, -2 / s6],
                [1 / s3, -1 / s2, 1 / s6],
            ]
        )
        es = EigenSystem(("a", "b", "c"), np.array([2.0, 0.6, 0.4]), vectors)
        assert sign_signatures(es, 1).signatures == ("+", "+", "-")
        assert _groups(sign_clusters(es, 1)) == {frozenset({"a", "b"}), frozenset({"c"})}

    def test_names_follow_signature_order(self) -> None:
        es = eigendecompose(block_correlation([2, 2], within=0.8, between=0.2))
        sig = sign_signatures(es, 1)
        cluster_map = sign_clusters(es, 1)
        positive = sig.signatures.index("+")
        assert cluster_map.labels[positive] == "Cluster 1"

    def test_partition_and_bound(self, panel) -> None:
        es = eigendecompose(correlation_matrix(panel))
        for k in range(1, 5):
            cluster_map = sign_clusters(es, k)
            assert 1 <= cluster_map.b <= 2**k
            assert sum(cluster_map.sizes().values()) == panel.n_assets
            assert len(cluster_map.labels) == panel.n_assets

    def test_refines_as_k_grows(self, panel) -> None:
        es = eigendecompose(correlation_matrix(panel))
        previous = sign_signatures(es, 1).signatures
        for k in range(2, 6):
            current = sign_signatures(es, k).signatures
            assert all(c.startswith(p) for p, c in zip(previous, current))
            previous = current

    def test_deterministic(self, panel) -> None:
        es = eigendecompose(correlation_matrix(panel))
        assert sign_clusters(es, 3) == sign_clusters(es, 3)

    def test_k_too_large(self) -> None:
        es = eigendecompose(np.eye(3) * 0.5 + 0.5)
        with pytest.raises(HpcaError) as exc_info:
            sign_clusters(es, 3)
        assert exc_info.value.code == ErrorCode.VALIDATION_OUT_OF_RANGE
        assert exc_info.value.exit_code == 1

    def test_degenerate_eigenvalues_warn(self, recording_logger) -> None:
        es = eigendecompose(np.eye(4))
        sign_clusters(es, 2, logger=recording_logger)
        assert any("degenerate" in m for m in recording_logger.messages("warn"))

    def test_separates_countries(self) -> None:
        universe = hierarchical_panel(
            clusters=1, per_cluster=20, periods=1500,
            global_strength=0.8, cluster_strength=0.0, country_strength=0.7,
            noise=0.5, countries=2, seed=11,
        )
        panel = standardize(compute_returns(universe.prices))
        cluster_map = sign_clusters(eigendecompose(correlation_matrix(panel)), 1)
        country = {m.ticker: m.country for m in universe.meta}
        assert cluster_map.b == 2
        seen = set()
        for name in cluster_map.names:
            members = [country[cluster_map.tickers[i]] for i in cluster_map.members(name)]
            top = max(set(members), key=members.count)
            assert members.count(top) >= 0.9 * len(members)
            seen.add(top)
        assert seen == {"Country 1", "Country 2"}


class TestClusterComposition:
    META = [
        AssetMeta("a", "Tech", "US"),
        AssetMeta("b", "Tech", "UK"),
        AssetMeta("c", "Energy", "US"),
        AssetMeta("d", "", "US"),
    ]

    def test_single_sector_cluster(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c", "d"), ["x", "x", "y", "y"])
        report = cluster_composition(cluster_map, self.META)
        first = report.clusters[0]
        assert first.cluster == "x"
        assert first.top_sectors == ("Tech",)
        assert first.top_sector_pct == pytest.approx(100.0)
        assert first.pct == pytest.approx(50.0)

    def test_counts_and_percentages(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c", "d"), ["x", "x", "y", "y"])
        report = cluster_composition(cluster_map, self.META)
        assert sum(c.n for c in report.clusters) == 4
        assert sum(c.pct for c in report.clusters) == pytest.approx(100.0)

    def test_blank_label(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c", "d"), ["x", "x", "y", "y"])
        second = cluster_composition(cluster_map, self.META).clusters[1]
        assert set(second.top_sectors) == {"Energy", "unlabeled"}
        assert second.top_countries == ("US",)

    def test_frame(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "b", "c", "d"), ["x", "x", "y", "y"])
        frame = cluster_composition(cluster_map, self.META).to_frame()
        assert frame["n"].tolist() == [2, 2]
        assert frame.loc[0, "top_sectors"] == "Tech"

    def test_missing_metadata(self) -> None:
        cluster_map = ClusterMap.from_labels(("a", "z"), ["x", "x"])
        with pytest.raises(DataIngestionError):
            cluster_composition(cluster_map, self.META)
