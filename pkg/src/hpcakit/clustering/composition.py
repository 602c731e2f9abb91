"""Sector and country make-up of each cluster."""

from __future__ import annotations

from collections.abc import Sequence

import pandas as pd

from hpcakit.returns.io import meta_by_ticker
from hpcakit.types.cluster import ClusterComposition, ClusterMap, StatClusterReport
from hpcakit.types.panel import AssetMeta

TOP_LABELS = 3
UNLABELED = "unlabeled"


def _top_labels(labels: pd.Series, size: int) -> tuple[tuple[str, ...], float]:
    counts = labels.value_counts().rename_axis("label").reset_index(name="count")
    counts = counts.sort_values(["count", "label"], ascending=[False, True]).head(TOP_LABELS)
    return tuple(counts["label"]), 100.0 * float(counts["count"].sum()) / size


def cluster_composition(cluster_map: ClusterMap, meta: Sequence[AssetMeta]) -> StatClusterReport:
    """Membership and top-3 sector/country shares (in percent) of every cluster.

    Raises:
        DataIngestionError: ``meta`` does not cover every asset of the map.
    """
    ordered = meta_by_ticker(list(meta), cluster_map.tickers)
    frame = pd.DataFrame(
        {
            "cluster": list(cluster_map.labels),
            "sector": [m.sector or UNLABELED for m in ordered],
            "country": [m.country or UNLABELED for m in ordered],
            "ticker": list(cluster_map.tickers),
        }
    )
    universe = len(frame)
    groups = dict(tuple(frame.groupby("cluster", sort=False)))

    clusters = []
    for name in cluster_map.names:
        members = groups[name]
        size = len(members)
        sectors, sector_pct = _top_labels(members["sector"], size)
        countries, country_pct = _top_labels(members["country"], size)
        clusters.append(
            ClusterComposition(
                cluster=name,
                members=tuple(members["ticker"]),
                pct=100.0 * size / universe,
                top_sectors=sectors,
                top_sector_pct=sector_pct,
                top_countries=countries,
                top_country_pct=country_pct,
            )
        )
    return StatClusterReport(universe=universe, clusters=tuple(clusters))
