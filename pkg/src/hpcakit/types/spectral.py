"""Correlation and spectral decomposition types."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd

from hpcakit.utils.arrays import frozen_array


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric N x N matrix with unit diagonal, labeled by ticker."""
    tickers: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", frozen_array(self.values))
        object.__setattr__(self, "tickers", tuple(self.tickers))

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    def to_frame(self) -> pd.DataFrame:
        labels = list(self.tickers)
        return pd.DataFrame(self.values, index=labels, columns=labels)


@dataclass(frozen=True)
class EigenSystem:
    """Descending eigenvalues and sign-normalized orthonormal eigenvectors.

    Column ``k - 1`` of ``eigenvectors`` is V^(k).
    """
    tickers: tuple[str, ...]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", frozen_array(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", frozen_array(self.eigenvectors))
        object.__setattr__(self, "tickers", tuple(self.tickers))

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    def vector(self, k: int) -> np.ndarray:
        """Return V^(k), 1-based."""
        return self.eigenvectors[:, k - 1]

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.T


@dataclass(frozen=True)
class ExplainedVariance:
    fractions: np.ndarray
    cumulative: np.ndarray


@dataclass(frozen=True)
class Eigenportfolio:
    """The k-th eigenportfolio: loadings V^(k)_i / sigma_i and its return series.

    Attributes:
        order: Eigenvector order k (1-based).
        tickers: Asset identifiers.
        loadings: Per-asset loadings, scaled to unit gross exposure when
            ``normalized`` is True.
        returns: Factor returns (raw returns dotted with the loadings).
        dates: Dates of ``returns``.
        normalized: Whether loadings were rescaled to sum(|theta|) = 1.
        scale: Factor applied to the unnormalized loadings.
    """
    order: int
    tickers: tuple[str, ...]
    loadings: np.ndarray
    returns: np.ndarray
    dates: pd.DatetimeIndex
    normalized: bool = False
    scale: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "loadings", frozen_array(self.loadings))
        object.__setattr__(self, "returns", frozen_array(self.returns))


@dataclass(frozen=True)
class SpectrumDistribution:
    """Singular-value spectrum of a T x N standardized return matrix.

    ``u``, ``singular_values`` and ``vt`` are the thin SVD factors R = U D V;
    ``probabilities`` are sigma_j / ||sigma||_1.
    """
    singular_values: np.ndarray
    probabilities: np.ndarray
    u: np.ndarray
    vt: np.ndarray

    @property
    def q(self) -> int:
        return int(self.singular_values.shape[0])
