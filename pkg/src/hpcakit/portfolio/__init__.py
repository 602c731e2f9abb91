"""Portfolio construction, backtesting and performance statistics."""

from hpcakit.portfolio.backtest import backtest, run_backtests, strategy_weights
from hpcakit.portfolio.optimizer import max_sharpe, shrink_covariance, shrinkage_intensity
from hpcakit.portfolio.stats import PERIODS_PER_YEAR, perf_stats, stats_frame

__all__ = [
    "PERIODS_PER_YEAR",
    "backtest",
    "max_sharpe",
    "perf_stats",
    "run_backtests",
    "shrink_covariance",
    "shrinkage_intensity",
    "stats_frame",
    "strategy_weights",
]
