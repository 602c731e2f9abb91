"""Hierarchical PCA: cluster benchmark factors and the assembled model matrix."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

import numpy as np
from scipy import linalg

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import (
    EmptyClusterError,
    MissingLabelError,
    NotPositiveSemidefiniteError,
)
from hpcakit.pca.engine import CLIP_TOL, correlation_matrix, eigendecompose
from hpcakit.returns.io import meta_by_ticker
from hpcakit.types.cluster import ClusterMap, ClusterPca, ClusterScheme, HpcaModel
from hpcakit.types.panel import AssetMeta, StandardizedPanel
from hpcakit.types.spectral import CorrelationMatrix
from hpcakit.utils.logger import Logger, resolve_logger
from hpcakit.validators.input_validators import validate_label

# Minimum eigenvalue of C_hat below this is an input inconsistency, not round-off.
PSD_TOL = 1e-8


def partition(
    meta: Sequence[AssetMeta],
    scheme: ClusterScheme | str | Mapping[str, str],
    tickers: Sequence[str] | None = None,
    min_cluster_size: int = 1,
) -> ClusterMap:
    """Partition the universe by a metadata label or a custom ticker -> label map.

    Args:
        meta: Asset metadata; reordered to ``tickers`` when given.
        scheme: ``sector``, ``country`` or an explicit mapping.
        tickers: Universe order of the resulting map.
        min_cluster_size: Clusters smaller than this are rejected.

    Raises:
        MissingLabelError: An asset has no label under the scheme.
        EmptyClusterError: A cluster falls below ``min_cluster_size``.
    """
    ordered = list(meta) if tickers is None else meta_by_ticker(list(meta), tuple(tickers))

    labels: list[str] = []
    if isinstance(scheme, Mapping):
        scheme_name = "custom"
        for m in ordered:
            label = scheme.get(m.ticker)
            if label is None or validate_label(label):
                raise MissingLabelError(m.ticker, scheme_name)
            labels.append(label.strip())
    else:
        scheme_name = ClusterScheme(scheme).value
        if scheme_name == ClusterScheme.STAT.value:
            raise HpcaError.validation_error(
                "Statistical clusters come from sign_clusters, not metadata", module="hpca"
            )
        for m in ordered:
            label = m.label(scheme_name)
            if validate_label(label):
                raise MissingLabelError(m.ticker, scheme_name)
            labels.append(label.strip())

    if not labels:
        raise EmptyClusterError("No assets to partition")

    cluster_map = ClusterMap.from_labels([m.ticker for m in ordered], labels)
    small = {name: n for name, n in cluster_map.sizes().items() if n < min_cluster_size}
    if small:
        raise EmptyClusterError(
            f"{len(small)} clusters have fewer than {min_cluster_size} assets",
            details={"clusters": small},
        )
    return cluster_map


def _check_alignment(panel: StandardizedPanel, cluster_map: ClusterMap) -> None:
    if tuple(panel.tickers) != tuple(cluster_map.tickers):
        raise HpcaError.validation_error(
            "Cluster map and panel list different tickers", module="hpca"
        )


def cluster_pca(
    panel: StandardizedPanel,
    cluster_map: ClusterMap,
    *,
    logger: Logger | None = None,
) -> tuple[ClusterPca, ...]:
    """First principal component of every cluster.

    The benchmark factor is F = X v / sqrt(lambda1), so it has zero mean and
    unit variance; betas are sqrt(lambda1) * v, the correlation of each
    member with F.
    """
    _check_alignment(panel, cluster_map)
    log = resolve_logger(logger)
    returns = panel.returns
    pcas: list[ClusterPca] = []
    for name in cluster_map.names:
        idx = cluster_map.members(name)
        block = returns[:, idx]
        sub = block.T @ block / panel.n_periods
        sub = 0.5 * (sub + sub.T)
        np.fill_diagonal(sub, 1.0)
        members = tuple(panel.tickers[i] for i in idx)
        es = eigendecompose(CorrelationMatrix(members, sub), module="hpca")

        lambda1 = float(es.eigenvalues[0])
        vector = es.vector(1)
        root = np.sqrt(lambda1)
        pcas.append(
            ClusterPca(
                name=name,
                indices=idx,
                lambda1=lambda1,
                vector=vector,
                factor=block @ vector / root,
                betas=root * vector,
            )
        )
        log.debug("Cluster %s: n=%d lambda1=%.6f", name, idx.size, lambda1)
    return tuple(pcas)


def inter_cluster_corr(pcas: Sequence[ClusterPca]) -> np.ndarray:
    """Sample correlation matrix of the benchmark factors, one row per cluster."""
    if not pcas:
        raise EmptyClusterError("No cluster factors to correlate")
    lengths = {pca.factor.shape[0] for pca in pcas}
    if len(lengths) != 1:
        raise HpcaError.validation_error(
            "Benchmark factors have different lengths", module="hpca"
        )
    if len(pcas) == 1:
        return np.ones((1, 1))

    factors = np.column_stack([pca.factor for pca in pcas])
    rho = np.atleast_2d(np.corrcoef(factors, rowvar=False))
    rho = 0.5 * (rho + rho.T)
    np.clip(rho, -1.0, 1.0, out=rho)
    np.fill_diagonal(rho, 1.0)
    return rho


def _repair(c_hat: np.ndarray) -> np.ndarray:
    """Clip negative eigenvalues and rescale back to a unit diagonal."""
    eigvals, eigvecs = linalg.eigh(c_hat)
    rebuilt = (eigvecs * np.clip(eigvals, 0.0, None)) @ eigvecs.T
    scale = 1.0 / np.sqrt(np.diag(rebuilt))
    rebuilt = rebuilt * np.outer(scale, scale)
    rebuilt = 0.5 * (rebuilt + rebuilt.T)
    np.fill_diagonal(rebuilt, 1.0)
    return rebuilt


def assemble_hpca(
    c: CorrelationMatrix,
    pcas: Sequence[ClusterPca],
    rho: np.ndarray,
    cluster_map: ClusterMap,
    *,
    logger: Logger | None = None,
) -> HpcaModel:
    """Assemble the model matrix.

    Entries of a same-cluster pair are copied from ``c``; every other pair
    gets beta_i * beta_j * rho[I(i), I(j)].

    Raises:
        NotPositiveSemidefiniteError: The assembled matrix has an eigenvalue
            below -1e-8. A negative minimum above that is clipped and
            rescaled, and the model is flagged ``psd_repaired``.
    """
    log = resolve_logger(logger)
    n = len(cluster_map.tickers)
    rho = np.asarray(rho, dtype=float)
    if c.dim != n or rho.shape != (cluster_map.b, cluster_map.b) or len(pcas) != cluster_map.b:
        raise HpcaError.validation_error(
            "Inconsistent dimensions between matrix, cluster factors and map",
            module="hpca",
            details={"n": n, "b": cluster_map.b, "rho": list(rho.shape)},
        )

    betas = np.empty(n)
    for pca in pcas:
        betas[pca.indices] = pca.betas

    codes = cluster_map.codes
    same = codes[:, None] == codes[None, :]
    cross = np.outer(betas, betas) * rho[np.ix_(codes, codes)]
    c_hat = np.where(same, c.values, cross)

    try:
        min_eig = float(linalg.eigvalsh(c_hat)[0])
    except linalg.LinAlgError as exc:
        raise HpcaError.numerical_error(
            f"Eigensolver failed on the model matrix: {exc}", module="hpca"
        ) from exc

    if min_eig < -PSD_TOL:
        raise NotPositiveSemidefiniteError(min_eig, module="hpca")

    repaired = False
    if min_eig < 0.0:
        report = log.warn if min_eig < -CLIP_TOL else log.debug
        report("Model matrix minimum eigenvalue %.3e; clipping and rescaling", min_eig)
        c_hat = _repair(c_hat)
        repaired = True

    return HpcaModel(
        cluster_map=cluster_map,
        pcas=tuple(pcas),
        rho=rho,
        c_hat=c_hat,
        empirical=c,
        min_eigenvalue=min_eig,
        psd_repaired=repaired,
    )


def fit_hpca(
    panel: StandardizedPanel,
    cluster_map: ClusterMap,
    *,
    logger: Logger | None = None,
) -> HpcaModel:
    """Run cluster PCA, factor correlation and assembly on one panel."""
    pcas = cluster_pca(panel, cluster_map, logger=logger)
    rho = inter_cluster_corr(pcas)
    return assemble_hpca(correlation_matrix(panel), pcas, rho, cluster_map, logger=logger)


def off_block_mean_abs(matrix: CorrelationMatrix | np.ndarray, cluster_map: ClusterMap) -> float:
    """Mean absolute value of the entries linking two different clusters."""
    values = matrix.values if isinstance(matrix, CorrelationMatrix) else np.asarray(matrix)
    codes = cluster_map.codes
    mask = codes[:, None] != codes[None, :]
    if not mask.any():
        return 0.0
    return float(np.abs(values[mask]).mean())
