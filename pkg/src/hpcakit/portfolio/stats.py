"""Annualized performance statistics of equity curves."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import pandas as pd

from hpcakit.errors.hpca_errors import InsufficientHistoryError
from hpcakit.types.portfolio import BacktestResult, PerfStats

PERIODS_PER_YEAR = 252
STATS_COLUMNS = ["strategy", "cagr", "std_dev", "sharpe", "maxdd", "calmar"]


def perf_stats(
    result: BacktestResult | pd.Series | np.ndarray,
    periods_per_year: int = PERIODS_PER_YEAR,
) -> PerfStats:
    """CAGR, volatility, Sharpe, maximum drawdown and Calmar with a zero risk-free rate.

    Volatility is the population standard deviation of per-period simple
    returns. A ratio whose denominator is zero is reported as 0 and flagged.
    """
    if isinstance(result, BacktestResult):
        equity = result.equity.to_numpy(dtype=float)
    else:
        equity = np.asarray(result, dtype=float)
    if equity.shape[0] < 2:
        raise InsufficientHistoryError(int(equity.shape[0]), 2, module="portfolio")

    periods = equity.shape[0] - 1
    cagr = float((equity[-1] / equity[0]) ** (periods_per_year / periods) - 1.0)
    returns = equity[1:] / equity[:-1] - 1.0
    vol = float(returns.std() * np.sqrt(periods_per_year))
    maxdd = float(np.max(1.0 - equity / np.maximum.accumulate(equity)))

    sharpe_flagged = vol == 0.0
    sharpe = 0.0 if sharpe_flagged else float(returns.mean() * periods_per_year / vol)
    calmar_flagged = maxdd == 0.0
    calmar = 0.0 if calmar_flagged else cagr / maxdd

    return PerfStats(
        cagr=cagr,
        std_dev=vol,
        sharpe=sharpe,
        maxdd=maxdd,
        calmar=calmar,
        sharpe_flagged=sharpe_flagged,
        calmar_flagged=calmar_flagged,
    )


def stats_frame(
    results: Sequence[BacktestResult], periods_per_year: int = PERIODS_PER_YEAR
) -> pd.DataFrame:
    rows = [
        {"strategy": r.strategy.value, **perf_stats(r, periods_per_year).to_dict()}
        for r in results
    ]
    return pd.DataFrame(rows, columns=STATS_COLUMNS)
