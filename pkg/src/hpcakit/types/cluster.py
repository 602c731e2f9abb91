"""Cluster partition and HPCA model types."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import pandas as pd

from hpcakit.types.spectral import CorrelationMatrix
from hpcakit.utils.arrays import frozen_array

MULTI_CLUSTER = "multi-cluster"


class ClusterScheme(str, Enum):
    """Ways of partitioning the universe."""
    SECTOR = "sector"
    COUNTRY = "country"
    STAT = "stat"


@dataclass(frozen=True)
class ClusterMap:
    """Exact partition of the universe into ``b`` named clusters.

    ``labels[i]`` is the cluster of ``tickers[i]`` (the function I(i));
    ``names`` fixes the cluster order used by every per-cluster array.
    """
    tickers: tuple[str, ...]
    labels: tuple[str, ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tickers", tuple(self.tickers))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.tickers) != len(self.labels):
            raise ValueError("tickers and labels must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("cluster names must be unique")
        unknown = set(self.labels) - set(self.names)
        if unknown:
            raise ValueError(f"labels without a cluster: {sorted(unknown)}")
        unused = set(self.names) - set(self.labels)
        if unused:
            raise ValueError(f"empty clusters: {sorted(unused)}")

    @classmethod
    def from_labels(cls, tickers: tuple[str, ...] | list[str], labels: list[str]) -> ClusterMap:
        """Build a map whose cluster order is the sorted set of labels."""
        return cls(tuple(tickers), tuple(labels), tuple(sorted(set(labels))))

    @property
    def b(self) -> int:
        return len(self.names)

    @property
    def codes(self) -> np.ndarray:
        """Per-asset integer index into ``names``."""
        position = {name: k for k, name in enumerate(self.names)}
        return np.array([position[label] for label in self.labels], dtype=int)

    def members(self, name: str) -> np.ndarray:
        return np.flatnonzero(np.array(self.labels, dtype=object) == name)

    def sizes(self) -> dict[str, int]:
        return {name: int(self.members(name).size) for name in self.names}

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"ticker": list(self.tickers), "cluster": list(self.labels)})


@dataclass(frozen=True)
class ClusterPca:
    """First principal component of one cluster.

    Attributes:
        name: Cluster name.
        indices: Positions of the cluster's assets in the universe.
        lambda1: First eigenvalue of the cluster correlation matrix.
        vector: First eigenvector over the cluster's assets.
        factor: Benchmark factor F^k = X V^k / sqrt(lambda1), length T.
        betas: Correlation of each member with ``factor``.
    """
    name: str
    indices: np.ndarray
    lambda1: float
    vector: np.ndarray
    factor: np.ndarray
    betas: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", np.array(self.indices, dtype=int))
        object.__setattr__(self, "vector", frozen_array(self.vector))
        object.__setattr__(self, "factor", frozen_array(self.factor))
        object.__setattr__(self, "betas", frozen_array(self.betas))

    @property
    def size(self) -> int:
        return int(self.indices.size)


@dataclass(frozen=True)
class HpcaModel:
    """Assembled hierarchical model correlation matrix and its ingredients."""
    cluster_map: ClusterMap
    pcas: tuple[ClusterPca, ...]
    rho: np.ndarray
    c_hat: np.ndarray
    empirical: CorrelationMatrix
    min_eigenvalue: float
    psd_repaired: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", frozen_array(self.rho))
        object.__setattr__(self, "c_hat", frozen_array(self.c_hat))

    @property
    def betas(self) -> np.ndarray:
        out = np.empty(len(self.cluster_map.tickers))
        for pca in self.pcas:
            out[pca.indices] = pca.betas
        return out

    def model_matrix(self) -> CorrelationMatrix:
        return CorrelationMatrix(self.cluster_map.tickers, self.c_hat)


@dataclass(frozen=True)
class SignSignatures:
    """Per-asset sign patterns of eigenvectors 2..K+1 as '+'/'-' strings."""
    tickers: tuple[str, ...]
    signatures: tuple[str, ...]
    k: int

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"ticker": list(self.tickers), "signature": list(self.signatures)})


@dataclass(frozen=True)
class ClusterComposition:
    cluster: str
    members: tuple[str, ...]
    pct: float
    top_sectors: tuple[str, ...]
    top_sector_pct: float
    top_countries: tuple[str, ...]
    top_country_pct: float

    @property
    def n(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class StatClusterReport:
    """Membership and label composition of each nonempty cluster."""
    universe: int
    clusters: tuple[ClusterComposition, ...] = field(default_factory=tuple)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "cluster": c.cluster,
                "n": c.n,
                "pct": c.pct,
                "top_sectors": "|".join(c.top_sectors),
                "top_sector_pct": c.top_sector_pct,
                "top_countries": "|".join(c.top_countries),
                "top_country_pct": c.top_country_pct,
            }
            for c in self.clusters
        ]
        return pd.DataFrame(
            rows,
            columns=[
                "cluster", "n", "pct", "top_sectors", "top_sector_pct",
                "top_countries", "top_country_pct",
            ],
        )


@dataclass(frozen=True)
class GaussianCheck:
    """Outcome of re-estimating a model matrix from Gaussian draws.

    Attributes:
        samples: Number of draws from N(0, C_hat).
        max_deviation: Largest absolute entrywise gap between the
            re-estimated correlation and C_hat.
        tolerance: Accepted gap, 4 / sqrt(samples).
    """
    samples: int
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance
