"""Hierarchical PCA model construction."""

from hpcakit.hpca.localization import (
    cluster_report,
    cluster_shares,
    localization_label,
    localization_report,
)
from hpcakit.hpca.model import (
    assemble_hpca,
    cluster_pca,
    fit_hpca,
    inter_cluster_corr,
    off_block_mean_abs,
    partition,
)
from hpcakit.hpca.verify import verify_gaussian

__all__ = [
    "assemble_hpca",
    "cluster_pca",
    "cluster_report",
    "cluster_shares",
    "fit_hpca",
    "inter_cluster_corr",
    "localization_label",
    "localization_report",
    "off_block_mean_abs",
    "partition",
    "verify_gaussian",
]
