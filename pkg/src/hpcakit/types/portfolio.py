"""Portfolio, backtest and performance types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
import pandas as pd

from hpcakit.utils.arrays import frozen_array

if TYPE_CHECKING:
    from hpcakit.types.config import BacktestConfig


class Strategy(str, Enum):
    """Backtestable strategies."""
    FIRST_EIGEN = "first_eigen"
    HPCA_STAT = "hpca_stat"
    HPCA_GICS = "hpca_gics"
    SHRINKAGE = "shrinkage"
    INDEX_PROXY = "index_proxy"


STRATEGY_LABELS: dict[Strategy, str] = {
    Strategy.FIRST_EIGEN: "First Eigen",
    Strategy.HPCA_STAT: "Stat. Clustering",
    Strategy.HPCA_GICS: "GICS",
    Strategy.SHRINKAGE: "Shrinkage",
    Strategy.INDEX_PROXY: "Equal-weight proxy",
}


@dataclass(frozen=True)
class WeightVector:
    """Portfolio weights normalized to unit gross exposure.

    Attributes:
        tickers: Asset identifiers.
        weights: Per-asset weights.
        long_only: Whether negative weights were projected out.
        clipped: Number of entries set to zero by the long-only projection.
    """
    tickers: tuple[str, ...]
    weights: np.ndarray
    long_only: bool = False
    clipped: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "tickers", tuple(self.tickers))
        object.__setattr__(self, "weights", frozen_array(self.weights))

    @property
    def gross(self) -> float:
        return float(np.abs(self.weights).sum())

    @property
    def net(self) -> float:
        return float(self.weights.sum())

    def to_series(self) -> pd.Series:
        return pd.Series(self.weights, index=list(self.tickers))


@dataclass(frozen=True)
class BacktestResult:
    """Equity path of one strategy.

    Attributes:
        strategy: Strategy that produced the path.
        equity: Date-indexed equity, first value 1.0.
        turnover: Date-indexed turnover, zero away from rebalance dates.
        weights: Target weights per rebalance date (rows) and ticker (columns).
        config: Echo of the backtest configuration.
    """
    strategy: Strategy
    equity: pd.Series
    turnover: pd.Series
    weights: pd.DataFrame
    config: BacktestConfig

    @property
    def rebalance_dates(self) -> pd.DatetimeIndex:
        return pd.DatetimeIndex(self.weights.index)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "date": self.equity.index,
                "strategy": self.strategy.value,
                "equity": self.equity.to_numpy(),
                "turnover": self.turnover.reindex(self.equity.index).fillna(0.0).to_numpy(),
            }
        )


@dataclass(frozen=True)
class PerfStats:
    """Annualized performance statistics with the risk-free rate at zero.

    ``sharpe_flagged`` and ``calmar_flagged`` mark ratios reported as 0
    because their denominator (volatility, drawdown) is zero.
    """
    cagr: float
    std_dev: float
    sharpe: float
    maxdd: float
    calmar: float
    sharpe_flagged: bool = False
    calmar_flagged: bool = False

    def to_dict(self) -> dict[str, float]:
        return {
            "cagr": self.cagr,
            "std_dev": self.std_dev,
            "sharpe": self.sharpe,
            "maxdd": self.maxdd,
            "calmar": self.calmar,
        }
