"""Return computation, standardization and rolling estimation windows."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

import numpy as np
import pandas as pd

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import ConstantSeriesError, InsufficientHistoryError
from hpcakit.types.panel import PricePanel, ReturnKind, StandardizedPanel
from hpcakit.validators.input_validators import validate_step, validate_window

# Columns whose population std falls below this (relative to the mean level)
# are treated as constant.
ZERO_VOL_TOL = 1e-14
# Calendar used when a bare array arrives without dates.
DEFAULT_START = "2000-01-03"


def compute_returns(panel: PricePanel, kind: ReturnKind | str = ReturnKind.LOG) -> pd.DataFrame:
    """Per-period returns of every asset.

    Args:
        panel: Complete price panel with at least two dates.
        kind: ``log`` for ln(p_t / p_{t-1}), ``simple`` for p_t / p_{t-1} - 1.

    Returns:
        A (T_p - 1) x N frame indexed by the later date of each pair.
    """
    kind = ReturnKind(kind)
    if panel.n_dates < 2:
        raise InsufficientHistoryError(panel.n_dates, 2)

    ratio = panel.prices[1:] / panel.prices[:-1]
    values = np.log(ratio) if kind is ReturnKind.LOG else ratio - 1.0
    return pd.DataFrame(values, index=panel.dates[1:], columns=list(panel.tickers))


def standardize(
    raw: pd.DataFrame | np.ndarray,
    *,
    dates: pd.DatetimeIndex | None = None,
    tickers: Sequence[str] | None = None,
) -> StandardizedPanel:
    """Standardize each column to mean 0 and variance 1 under the 1/T convention.

    Args:
        raw: T x N raw returns. A DataFrame supplies its own dates and tickers.
        dates: Row dates when ``raw`` is a bare array.
        tickers: Column names when ``raw`` is a bare array.

    Raises:
        ConstantSeriesError: A column has zero standard deviation.
    """
    if isinstance(raw, pd.DataFrame):
        values = raw.to_numpy(dtype=float)
        dates = pd.DatetimeIndex(raw.index)
        tickers = [str(c) for c in raw.columns]
    else:
        values = np.asarray(raw, dtype=float)
        if values.ndim != 2:
            raise HpcaError.validation_error(
                "Return matrix must be two-dimensional", module="returns"
            )
        if tickers is None:
            tickers = [f"A{i + 1}" for i in range(values.shape[1])]
        if dates is None:
            dates = pd.bdate_range(DEFAULT_START, periods=values.shape[0])

    if values.shape[0] < 1:
        raise InsufficientHistoryError(values.shape[0], 1)

    means = values.mean(axis=0)
    centered = values - means
    vols = np.sqrt((centered**2).mean(axis=0))
    for j, vol in enumerate(vols):
        if not np.isfinite(vol) or vol <= ZERO_VOL_TOL * max(1.0, abs(means[j])):
            raise ConstantSeriesError(tickers[j])

    return StandardizedPanel(
        dates=pd.DatetimeIndex(dates),
        tickers=tuple(tickers),
        returns=centered / vols,
        means=means,
        vols=vols,
    )


def window_count(periods: int, width: int, step: int) -> int:
    return (periods - width) // step + 1


def iter_windows(
    panel: StandardizedPanel, width: int, step: int
) -> Iterator[tuple[int, StandardizedPanel]]:
    """Yield ``(start, window)`` pairs; see :func:`rolling_windows`."""
    step_err = validate_step(step)
    if step_err:
        raise HpcaError.validation_error(
            step_err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="returns"
        )
    window_err = validate_window(width, panel.n_periods)
    if window_err:
        raise InsufficientHistoryError(panel.n_periods, width, details={"reason": window_err})

    raw = panel.raw
    for n in range(window_count(panel.n_periods, width, step)):
        start = n * step
        yield start, standardize(
            raw[start:start + width],
            dates=panel.dates[start:start + width],
            tickers=panel.tickers,
        )


def rolling_windows(panel: StandardizedPanel, width: int, step: int) -> list[StandardizedPanel]:
    """Slice ``[0, width), [step, step + width), ...`` and restandardize each slice.

    Each window uses its own mean and volatility, recomputed from the raw
    returns recovered from ``panel``.

    Raises:
        InsufficientHistoryError: ``width`` exceeds the number of periods.
    """
    return [window for _, window in iter_windows(panel, width, step)]
