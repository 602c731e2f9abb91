"""Seeded generators for synthetic universes and correlation matrices."""

from __future__ import annotations

import numpy as np
import pandas as pd

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.returns.transforms import DEFAULT_START, standardize
from hpcakit.types.panel import AssetMeta, PricePanel, StandardizedPanel, SyntheticUniverse

START_PRICE = 100.0


def hierarchical_panel(
    clusters: int = 3,
    per_cluster: int = 10,
    periods: int = 1000,
    *,
    global_strength: float = 0.6,
    cluster_strength: float = 0.5,
    noise: float = 0.6,
    countries: int = 2,
    country_strength: float = 0.0,
    vol: float = 0.01,
    drift: float = 0.0002,
    seed: int = 0,
) -> SyntheticUniverse:
    """Prices driven by a global factor, one factor per cluster and idiosyncratic noise.

    Log return of asset i in cluster c:
    ``vol * (global * g + cluster * f_c + country * s_i * h + noise * e_i) + drift``
    where ``s_i`` is +1 for odd-numbered countries and -1 for even ones, so a
    nonzero ``country_strength`` splits the universe into two anticorrelated
    country groups. Assets are assigned to countries round-robin within each
    cluster. Sectors are ``Sector 1..clusters``.
    """
    if clusters < 1 or per_cluster < 1 or periods < 1 or countries < 1:
        raise HpcaError.validation_error(
            "Synthetic universe needs positive cluster, asset, period and country counts"
        )
    rng = np.random.default_rng(seed)
    n = clusters * per_cluster
    cluster_of = np.repeat(np.arange(clusters), per_cluster)
    country_of = np.tile(np.arange(per_cluster) % countries, clusters)
    country_sign = np.where(country_of % 2 == 0, 1.0, -1.0)

    g = rng.standard_normal(periods)
    f = rng.standard_normal((periods, clusters))
    h = rng.standard_normal(periods)
    e = rng.standard_normal((periods, n))

    shocks = (
        global_strength * g[:, None]
        + cluster_strength * f[:, cluster_of]
        + country_strength * h[:, None] * country_sign
        + noise * e
    )
    log_returns = vol * shocks + drift
    levels = np.vstack([np.zeros(n), np.cumsum(log_returns, axis=0)])

    tickers = tuple(
        f"S{c + 1:02d}A{j + 1:03d}" for c in range(clusters) for j in range(per_cluster)
    )
    dates = pd.bdate_range(DEFAULT_START, periods=periods + 1)
    meta = tuple(
        AssetMeta(
            ticker=tickers[i],
            sector=f"Sector {cluster_of[i] + 1}",
            country=f"Country {country_of[i] + 1}",
        )
        for i in range(n)
    )
    return SyntheticUniverse(
        prices=PricePanel(dates, tickers, START_PRICE * np.exp(levels)),
        meta=meta,
    )


def equicorrelated(n: int, rho: float) -> np.ndarray:
    """(1 - rho) I + rho 11^T; its top eigenvalue is 1 + (n - 1) rho."""
    return (1.0 - rho) * np.eye(n) + rho * np.ones((n, n))


def block_correlation(sizes: list[int], within: float, between: float) -> np.ndarray:
    """Block matrix with ``within`` inside blocks and ``between`` across them."""
    labels = np.repeat(np.arange(len(sizes)), sizes)
    c = np.where(labels[:, None] == labels[None, :], within, between).astype(float)
    np.fill_diagonal(c, 1.0)
    return c


def random_correlation(
    n: int,
    rng: np.random.Generator,
    *,
    rank: int | None = None,
    positive: bool = False,
) -> np.ndarray:
    """Correlation matrix normalized from the Gram matrix of random vectors.

    ``positive`` draws uniform coordinates, which makes every entry strictly
    positive; otherwise coordinates are standard normal.
    """
    width = rank if rank is not None else n + 2
    a = rng.uniform(0.0, 1.0, (n, width)) if positive else rng.standard_normal((n, width))
    gram = a @ a.T
    scale = 1.0 / np.sqrt(np.diag(gram))
    c = gram * np.outer(scale, scale)
    c = 0.5 * (c + c.T)
    np.fill_diagonal(c, 1.0)
    return c


def exact_panel(c: np.ndarray, periods: int, seed: int = 0) -> StandardizedPanel:
    """Standardized panel whose empirical correlation equals ``c`` to round-off.

    Centered Gaussian columns are orthonormalized and mapped through the
    symmetric square root of ``c``. Needs ``periods > N``.
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    if periods <= n:
        raise HpcaError.validation_error("exact_panel needs more periods than assets")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((periods, n))
    z -= z.mean(axis=0)
    q, _ = np.linalg.qr(z)
    eigvals, eigvecs = np.linalg.eigh(c)
    root = (eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.T
    return standardize(np.sqrt(periods) * q @ root)
