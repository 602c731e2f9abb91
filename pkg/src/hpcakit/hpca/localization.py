"""Eigenvector localization labels and per-cluster summaries."""

from __future__ import annotations

import numpy as np
import pandas as pd

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.types.cluster import MULTI_CLUSTER, ClusterMap, HpcaModel
from hpcakit.types.spectral import EigenSystem
from hpcakit.validators.input_validators import validate_threshold

SHARE_TOL = 1e-12


def cluster_shares(v: np.ndarray, cluster_map: ClusterMap) -> np.ndarray:
    """Squared weight of ``v`` falling in each cluster, in ``cluster_map.names`` order."""
    v = np.asarray(v, dtype=float)
    return np.bincount(cluster_map.codes, weights=v**2, minlength=cluster_map.b)


def localization_label(v: np.ndarray, cluster_map: ClusterMap, threshold: float = 0.5) -> str:
    """Name of the cluster holding at least ``threshold`` of ``v``'s squared weight.

    Returns ``multi-cluster`` when no cluster reaches the threshold or when
    the largest share is tied between clusters.
    """
    err = validate_threshold(threshold)
    if err:
        raise HpcaError.validation_error(
            err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="hpca"
        )
    shares = cluster_shares(v, cluster_map)
    top = int(np.argmax(shares))
    leaders = np.isclose(shares, shares[top], rtol=0.0, atol=SHARE_TOL)
    if leaders.sum() > 1:
        return MULTI_CLUSTER
    if shares[top] >= threshold - SHARE_TOL:
        return cluster_map.names[top]
    return MULTI_CLUSTER


def localization_report(
    es: EigenSystem,
    cluster_map: ClusterMap,
    top: int = 15,
    threshold: float = 0.5,
) -> pd.DataFrame:
    """Rank, eigenvalue, localization label and leading share of the top eigenvectors."""
    rows = []
    for k in range(1, min(top, es.dim) + 1):
        v = es.vector(k)
        shares = cluster_shares(v, cluster_map)
        rows.append(
            {
                "rank": k,
                "eigenvalue": float(es.eigenvalues[k - 1]),
                "label": localization_label(v, cluster_map, threshold),
                "max_share": float(shares.max()),
            }
        )
    return pd.DataFrame(rows, columns=["rank", "eigenvalue", "label", "max_share"])


def cluster_report(model: HpcaModel) -> pd.DataFrame:
    """One row per cluster: size, first eigenvalue and its share of the cluster trace."""
    return pd.DataFrame(
        [
            {
                "cluster": pca.name,
                "n_assets": pca.size,
                "lambda1": pca.lambda1,
                "lambda1_share": pca.lambda1 / pca.size,
            }
            for pca in model.pcas
        ],
        columns=["cluster", "n_assets", "lambda1", "lambda1_share"],
    )
