"""Factor model types."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hpcakit.utils.arrays import frozen_array


@dataclass(frozen=True)
class ExpectedReturns:
    """Per-asset least-squares fit of raw returns on K factor series.

    Attributes:
        mu: Expected return per asset.
        betas: N x K regression coefficients.
        residuals: T x N regression residuals.
        include_residual_mean: Whether ``mu`` also carries the residual mean.
    """
    mu: np.ndarray
    betas: np.ndarray
    residuals: np.ndarray
    include_residual_mean: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", frozen_array(self.mu))
        object.__setattr__(self, "betas", frozen_array(self.betas))
        object.__setattr__(self, "residuals", frozen_array(self.residuals))


@dataclass(frozen=True)
class FactorModel:
    """K-factor truncation of a correlation matrix plus an idiosyncratic diagonal.

    The model correlation is ``loadings @ diag(factor_variances) @ loadings.T
    + diag(zeta2)``. ``expected`` is filled in once factor regressions ran.
    """
    tickers: tuple[str, ...]
    k: int
    loadings: np.ndarray
    factor_variances: np.ndarray
    zeta2: np.ndarray
    expected: ExpectedReturns | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "tickers", tuple(self.tickers))
        object.__setattr__(self, "loadings", frozen_array(self.loadings))
        object.__setattr__(self, "factor_variances", frozen_array(self.factor_variances))
        object.__setattr__(self, "zeta2", frozen_array(self.zeta2))

    @property
    def mu(self) -> np.ndarray | None:
        return None if self.expected is None else self.expected.mu

    def correlation(self) -> np.ndarray:
        low_rank = (self.loadings * self.factor_variances) @ self.loadings.T
        return low_rank + np.diag(self.zeta2)

    def covariance(self, vols: np.ndarray) -> np.ndarray:
        """Scale the model correlation by per-asset volatilities."""
        vols = np.asarray(vols, dtype=float)
        return self.correlation() * np.outer(vols, vols)
