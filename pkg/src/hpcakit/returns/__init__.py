"""Price ingestion, returns and estimation windows."""

from hpcakit.returns.io import load_meta, load_prices, meta_by_ticker
from hpcakit.returns.transforms import (
    compute_returns,
    iter_windows,
    rolling_windows,
    standardize,
    window_count,
)

__all__ = [
    "load_prices",
    "load_meta",
    "meta_by_ticker",
    "compute_returns",
    "standardize",
    "rolling_windows",
    "iter_windows",
    "window_count",
]
