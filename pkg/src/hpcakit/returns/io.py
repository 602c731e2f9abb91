"""CSV ingestion of price panels and asset metadata."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_errors import DataIngestionError
from hpcakit.types.panel import AssetMeta, PricePanel
from hpcakit.utils.logger import Logger, resolve_logger

META_COLUMNS = ("ticker", "sector", "country")


def load_prices(
    path: str | Path,
    min_history: int = 2,
    *,
    logger: Logger | None = None,
) -> PricePanel:
    """Load a ``date,TICKER1,TICKER2,...`` CSV into a complete price panel.

    Tickers with fewer than ``min_history`` observations are dropped, gaps are
    forward-filled and rows still carrying a leading gap are removed.

    Args:
        path: CSV file path; empty cells are missing prices.
        min_history: Minimum non-missing observations per ticker.
        logger: Optional logger for filtering diagnostics.

    Returns:
        A PricePanel with strictly increasing dates and no missing cells.

    Raises:
        DataIngestionError: Unreadable file, duplicate dates or tickers,
            non-positive prices, or no surviving assets.
    """
    log = resolve_logger(logger)
    path_str = str(path)
    try:
        frame = pd.read_csv(path_str, comment="#")
    except (OSError, ValueError, pd.errors.ParserError) as exc:
        raise DataIngestionError(f"Cannot read prices: {exc}", path=path_str) from exc

    if frame.shape[1] < 2 or frame.columns[0].strip().lower() != "date":
        raise DataIngestionError(
            "Prices CSV must have a header 'date,<ticker>,...'", path=path_str
        )

    tickers = [str(c).strip() for c in frame.columns[1:]]
    if len(set(tickers)) != len(tickers):
        raise DataIngestionError(
            "Duplicate ticker columns in prices CSV",
            ErrorCode.INPUT_DUPLICATE,
            path=path_str,
        )

    try:
        dates = pd.to_datetime(frame.iloc[:, 0], format="ISO8601")
    except (ValueError, TypeError) as exc:
        raise DataIngestionError(f"Unparseable dates: {exc}", path=path_str) from exc

    prices = frame.iloc[:, 1:].apply(pd.to_numeric, errors="coerce")
    prices.columns = tickers
    prices.index = pd.DatetimeIndex(dates)
    if prices.index.has_duplicates:
        raise DataIngestionError(
            "Duplicate dates in prices CSV", ErrorCode.INPUT_DUPLICATE, path=path_str
        )
    prices = prices.sort_index()

    observed = prices.notna().sum()
    keep = observed[observed >= min_history].index
    dropped = [t for t in tickers if t not in set(keep)]
    if dropped:
        log.info("Dropping %d tickers with fewer than %d observations", len(dropped), min_history)
    prices = prices[list(keep)]
    if prices.shape[1] == 0:
        raise DataIngestionError(
            f"No asset has at least {min_history} observations",
            ErrorCode.INPUT_NO_ASSETS,
            path=path_str,
        )

    values = prices.to_numpy(dtype=float)
    present = values[~np.isnan(values)]
    if np.any(present <= 0.0):
        raise DataIngestionError(
            "Non-positive price encountered", ErrorCode.INPUT_NON_POSITIVE_PRICE, path=path_str
        )

    prices = prices.ffill().dropna(how="any")
    if prices.shape[0] == 0:
        raise DataIngestionError(
            "No date has a price for every surviving asset",
            ErrorCode.INPUT_NO_ASSETS,
            path=path_str,
        )

    log.debug("Loaded %d dates x %d assets from %s", prices.shape[0], prices.shape[1], path_str)
    return PricePanel(
        dates=pd.DatetimeIndex(prices.index),
        tickers=tuple(prices.columns),
        prices=prices.to_numpy(dtype=float),
    )


def load_meta(path: str | Path) -> list[AssetMeta]:
    """Load a ``ticker,sector,country`` metadata CSV.

    Missing sector or country cells become empty strings; partitioning
    rejects them later for the scheme that needs them.
    """
    path_str = str(path)
    try:
        frame = pd.read_csv(path_str, comment="#", dtype=str, keep_default_na=False)
    except (OSError, ValueError, pd.errors.ParserError) as exc:
        raise DataIngestionError(f"Cannot read metadata: {exc}", path=path_str) from exc

    columns = [c.strip().lower() for c in frame.columns]
    if "ticker" not in columns:
        raise DataIngestionError(
            "Metadata CSV must have a header 'ticker,sector,country'",
            ErrorCode.INPUT_MISSING_METADATA,
            path=path_str,
        )
    frame.columns = columns
    for column in META_COLUMNS[1:]:
        if column not in frame:
            frame[column] = ""

    tickers = frame["ticker"].str.strip()
    if (tickers == "").any():
        raise DataIngestionError(
            "Blank ticker in metadata", ErrorCode.INPUT_MISSING_METADATA, path=path_str
        )
    if tickers.duplicated().any():
        raise DataIngestionError(
            "Duplicate ticker in metadata", ErrorCode.INPUT_DUPLICATE, path=path_str
        )

    return [
        AssetMeta(ticker=t, sector=s.strip(), country=c.strip())
        for t, s, c in zip(tickers, frame["sector"], frame["country"])
    ]


def meta_by_ticker(meta: list[AssetMeta], tickers: tuple[str, ...]) -> list[AssetMeta]:
    """Order ``meta`` like ``tickers``; every ticker must be covered."""
    lookup = {m.ticker: m for m in meta}
    missing = [t for t in tickers if t not in lookup]
    if missing:
        raise DataIngestionError(
            f"Metadata missing for {len(missing)} tickers: {', '.join(missing[:5])}",
            ErrorCode.INPUT_MISSING_METADATA,
        )
    return [lookup[t] for t in tickers]
