"""Price and return panel types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from hpcakit.utils.arrays import frozen_array


class ReturnKind(str, Enum):
    """Supported return definitions."""
    LOG = "log"
    SIMPLE = "simple"


@dataclass(frozen=True)
class PricePanel:
    """T_p x N matrix of positive adjusted closes, one row per date."""
    dates: pd.DatetimeIndex
    tickers: tuple[str, ...]
    prices: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "prices", frozen_array(self.prices))
        object.__setattr__(self, "tickers", tuple(self.tickers))

    @property
    def n_dates(self) -> int:
        return int(self.prices.shape[0])

    @property
    def n_assets(self) -> int:
        return int(self.prices.shape[1])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.prices, index=self.dates, columns=list(self.tickers))


@dataclass(frozen=True)
class StandardizedPanel:
    """T x N matrix of returns with zero mean and unit (1/T) variance per column.

    Attributes:
        dates: Return dates (the later date of each price pair).
        tickers: Asset identifiers, column order of ``returns``.
        returns: Standardized returns.
        means: Per-asset sample mean of the raw returns.
        vols: Per-asset population standard deviation of the raw returns.
    """
    dates: pd.DatetimeIndex
    tickers: tuple[str, ...]
    returns: np.ndarray
    means: np.ndarray
    vols: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "returns", frozen_array(self.returns))
        object.__setattr__(self, "means", frozen_array(self.means))
        object.__setattr__(self, "vols", frozen_array(self.vols))
        object.__setattr__(self, "tickers", tuple(self.tickers))

    @property
    def n_periods(self) -> int:
        return int(self.returns.shape[0])

    @property
    def n_assets(self) -> int:
        return int(self.returns.shape[1])

    @property
    def raw(self) -> np.ndarray:
        """Raw (un-standardized) returns recovered from the recorded moments."""
        return self.returns * self.vols + self.means

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.returns, index=self.dates, columns=list(self.tickers))


@dataclass(frozen=True)
class AssetMeta:
    """Labels for one asset; any free strings."""
    ticker: str
    sector: str = ""
    country: str = ""

    def label(self, scheme: str) -> str:
        if scheme == "sector":
            return self.sector
        if scheme == "country":
            return self.country
        raise ValueError(f"Unknown label scheme: {scheme}")


@dataclass(frozen=True)
class SyntheticUniverse:
    """Generated prices with matching metadata."""
    prices: PricePanel
    meta: tuple[AssetMeta, ...]

    def meta_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"ticker": m.ticker, "sector": m.sector, "country": m.country} for m in self.meta],
            columns=["ticker", "sector", "country"],
        )
