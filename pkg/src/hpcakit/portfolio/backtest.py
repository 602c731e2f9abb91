"""Rolling-window, periodically rebalanced strategy backtests."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import pandas as pd

from hpcakit.clustering.signs import sign_clusters
from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import EstimationError, InsufficientHistoryError
from hpcakit.factor.model import (
    expected_returns,
    sample_covariance,
    select_k,
    truncate_model,
)
from hpcakit.hpca.model import fit_hpca, partition
from hpcakit.pca.engine import correlation_matrix, eigendecompose, eigenportfolio
from hpcakit.portfolio.optimizer import max_sharpe, shrink_covariance
from hpcakit.returns.transforms import compute_returns, standardize
from hpcakit.types.cluster import ClusterMap
from hpcakit.types.config import BacktestConfig
from hpcakit.types.panel import AssetMeta, PricePanel, ReturnKind, StandardizedPanel
from hpcakit.types.portfolio import BacktestResult, Strategy
from hpcakit.utils.logger import Logger, resolve_logger


def _hpca_weights(
    window: StandardizedPanel,
    cluster_map: ClusterMap,
    config: BacktestConfig,
    logger: Logger,
) -> np.ndarray:
    model = fit_hpca(window, cluster_map, logger=logger)
    es = eigendecompose(model.model_matrix(), module="hpca")
    k = select_k(window)
    factor_model = truncate_model(es, k)
    factors = [eigenportfolio(es, window.vols, window, order) for order in range(1, k + 1)]
    expected = expected_returns(window, factors)
    sigma = factor_model.covariance(window.vols)
    return max_sharpe(expected.mu, sigma, config.optimizer, logger=logger).weights


def strategy_weights(
    strategy: Strategy,
    window: StandardizedPanel,
    config: BacktestConfig,
    *,
    sector_map: ClusterMap | None = None,
    logger: Logger | None = None,
) -> np.ndarray:
    """Target weights of ``strategy`` estimated on one standardized window."""
    log = resolve_logger(logger)
    n = window.n_assets
    if strategy is Strategy.INDEX_PROXY:
        return np.full(n, 1.0 / n)

    if strategy is Strategy.FIRST_EIGEN:
        es = eigendecompose(correlation_matrix(window))
        return eigenportfolio(es, window.vols, window, 1, normalize=True).loadings

    if strategy is Strategy.SHRINKAGE:
        sigma = shrink_covariance(sample_covariance(window), "auto", returns=window.raw)
        return max_sharpe(window.means, sigma, config.optimizer, logger=log).weights

    if strategy is Strategy.HPCA_STAT:
        es = eigendecompose(correlation_matrix(window))
        stat_map = sign_clusters(es, min(config.stat_k, max(1, n - 1)), logger=log)
        return _hpca_weights(window, stat_map, config, log)

    if sector_map is None:
        raise HpcaError.validation_error(
            "The hpca_gics strategy needs sector metadata", module="portfolio"
        )
    return _hpca_weights(window, sector_map, config, log)


def backtest(
    panel: PricePanel,
    strategy: Strategy | str,
    config: BacktestConfig | None = None,
    *,
    meta: Sequence[AssetMeta] | None = None,
    logger: Logger | None = None,
) -> BacktestResult:
    """Run one strategy over the price panel.

    The first trade happens once ``config.window`` returns are available.
    Every ``config.rebalance`` periods the strategy is re-estimated on the
    trailing window of returns (strictly before the next holding period),
    the book is traded to the new weights and ``cost_bps`` is charged on
    the turnover. Between rebalances positions drift with realized simple
    returns; uninvested capital earns nothing. ``index_proxy`` buys the
    equal-weight universe once and holds it.

    Raises:
        InsufficientHistoryError: Fewer than ``window + rebalance`` returns.
        EstimationError: A strategy failed on a window; the window dates are
            in the message and the original error is chained.
        HpcaError: Equity reached zero or below.
    """
    config = config or BacktestConfig()
    strategy = Strategy(strategy)
    log = resolve_logger(logger)

    simple = compute_returns(panel, ReturnKind.SIMPLE).to_numpy()
    estimation = compute_returns(panel, config.kind).to_numpy()
    dates = panel.dates[1:]
    periods, n = simple.shape
    required = config.window + config.rebalance
    if periods < required:
        raise InsufficientHistoryError(periods, required, module="portfolio")

    sector_map = None
    if strategy is Strategy.HPCA_GICS:
        if meta is None:
            raise HpcaError.validation_error(
                "The hpca_gics strategy needs sector metadata", module="portfolio"
            )
        sector_map = partition(meta, "sector", tickers=panel.tickers)

    start = config.window
    equity = 1.0
    positions = np.zeros(n)
    equity_values = [equity]
    trade_dates: list[pd.Timestamp] = []
    turnovers: list[float] = []
    weight_rows: list[np.ndarray] = []

    for t in range(start, periods):
        due = (t - start) % config.rebalance == 0
        if due and (t == start or strategy is not Strategy.INDEX_PROXY):
            lo = t - config.window
            if strategy is Strategy.INDEX_PROXY:
                weights = np.full(n, 1.0 / n)
            else:
                try:
                    window = standardize(
                        estimation[lo:t], dates=dates[lo:t], tickers=panel.tickers
                    )
                    weights = strategy_weights(
                        strategy, window, config, sector_map=sector_map, logger=log
                    )
                except HpcaError as exc:
                    raise EstimationError(
                        strategy.value,
                        str(dates[lo].date()),
                        str(dates[t - 1].date()),
                        str(exc),
                    ) from exc

            turnover = float(np.abs(weights - positions / equity).sum())
            equity -= config.cost_bps / 1e4 * turnover * equity
            positions = weights * equity
            trade_dates.append(dates[t - 1])
            turnovers.append(turnover)
            weight_rows.append(weights)
            log.debug("%s rebalance on %s: turnover %.4f", strategy.value, dates[t - 1], turnover)

        pnl = float(positions @ simple[t])
        positions = positions * (1.0 + simple[t])
        equity += pnl
        if equity <= 0.0:
            raise HpcaError(
                f"Strategy {strategy.value} lost all capital on {dates[t].date()}",
                code=ErrorCode.ESTIMATION_RUIN,
                module="portfolio",
            )
        equity_values.append(equity)

    index = pd.DatetimeIndex([dates[start - 1], *dates[start:]], name="date")
    trade_index = pd.DatetimeIndex(trade_dates, name="date")
    return BacktestResult(
        strategy=strategy,
        equity=pd.Series(equity_values, index=index, name="equity"),
        turnover=pd.Series(turnovers, index=trade_index, name="turnover"),
        weights=pd.DataFrame(weight_rows, index=trade_index, columns=list(panel.tickers)),
        config=config,
    )


def run_backtests(
    panel: PricePanel,
    strategies: Sequence[Strategy | str],
    config: BacktestConfig | None = None,
    *,
    meta: Sequence[AssetMeta] | None = None,
    logger: Logger | None = None,
) -> list[BacktestResult]:
    log = resolve_logger(logger)
    results = []
    for strategy in strategies:
        log.info("Backtesting %s", Strategy(strategy).value)
        results.append(backtest(panel, strategy, config, meta=meta, logger=logger))
    return results
