"""Implementations of the CLI subcommands.

Each command takes a validated RunConfig, writes its files under
``config.out`` and returns the written paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from hpcakit.clustering.composition import cluster_composition
from hpcakit.clustering.signs import sign_clusters, sign_signatures
from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.factor.model import (
    expected_returns,
    factor_report,
    loadings_report,
    select_k,
    truncate_model,
    with_expected,
)
from hpcakit.hpca.localization import cluster_report, localization_report
from hpcakit.hpca.model import fit_hpca, off_block_mean_abs, partition
from hpcakit.hpca.verify import verify_gaussian
from hpcakit.pca.engine import (
    correlation_matrix,
    eigendecompose,
    eigenportfolio,
    explained_variance,
    rolling_diversity,
)
from hpcakit.portfolio.backtest import run_backtests
from hpcakit.portfolio.stats import stats_frame
from hpcakit.reports.writers import (
    cumulative_frame,
    spectrum_frame,
    write_frame,
    write_matrix,
)
from hpcakit.returns.io import load_meta, load_prices, meta_by_ticker
from hpcakit.returns.transforms import compute_returns, standardize
from hpcakit.synthetic import hierarchical_panel
from hpcakit.types.cluster import ClusterMap, ClusterScheme, HpcaModel
from hpcakit.types.config import RunConfig
from hpcakit.types.panel import AssetMeta, PricePanel, StandardizedPanel
from hpcakit.types.portfolio import STRATEGY_LABELS, Strategy
from hpcakit.types.spectral import EigenSystem
from hpcakit.utils.logger import Logger, resolve_logger


@dataclass(frozen=True)
class LoadedInputs:
    prices: PricePanel
    panel: StandardizedPanel
    meta: list[AssetMeta] | None


def _load(config: RunConfig, logger: Logger) -> LoadedInputs:
    if config.prices is None:
        raise HpcaError.validation_error("--prices is required", module="cli")
    prices = load_prices(config.prices, config.min_history, logger=logger)
    panel = standardize(compute_returns(prices, config.kind))
    meta = None
    if config.meta:
        meta = meta_by_ticker(load_meta(config.meta), prices.tickers)
    logger.info("Universe: %d assets x %d periods", panel.n_assets, panel.n_periods)
    return LoadedInputs(prices=prices, panel=panel, meta=meta)


def _echo(config: RunConfig, panel: StandardizedPanel | PricePanel) -> dict[str, Any]:
    echo = config.to_echo()
    if isinstance(panel, StandardizedPanel):
        echo["n_assets"] = panel.n_assets
        echo["n_periods"] = panel.n_periods
    else:
        echo["n_assets"] = panel.n_assets
        echo["n_periods"] = panel.n_dates - 1
    return echo


def _cluster_map(
    config: RunConfig,
    inputs: LoadedInputs,
    es: EigenSystem,
    logger: Logger,
) -> ClusterMap:
    if config.scheme == ClusterScheme.STAT.value:
        return sign_clusters(es, config.k, logger=logger)
    if inputs.meta is None:
        raise HpcaError.validation_error(
            f"--meta is required with scheme={config.scheme}", module="cli"
        )
    return partition(inputs.meta, str(config.scheme), tickers=inputs.panel.tickers)


def _labels(inputs: LoadedInputs, cluster_map: ClusterMap | None) -> list[str]:
    if cluster_map is not None:
        return list(cluster_map.labels)
    if inputs.meta is not None:
        return [m.sector for m in inputs.meta]
    return [""] * inputs.panel.n_assets


def _eigenvector_frame(
    es: EigenSystem, vectors: tuple[int, ...], labels: list[str]
) -> pd.DataFrame:
    frame = pd.DataFrame({"ticker": list(es.tickers), "cluster_label": labels})
    for k in vectors:
        if k <= es.dim:
            frame[f"v_{k}"] = es.vector(k)
    return frame


def cmd_spectrum(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    """PCA (and, with a scheme, HPCA) spectra, cumulative curves and rolling diversity."""
    log = resolve_logger(logger)
    inputs = _load(config, log)
    panel = inputs.panel
    out = Path(config.out)
    echo = _echo(config, panel)

    es = eigendecompose(correlation_matrix(panel))
    curves = {"pca": explained_variance(es)}
    written = [
        write_frame(spectrum_frame(es.eigenvalues, curves["pca"]), out / "spectrum_pca.csv", echo)
    ]

    cluster_map = None
    if config.scheme is not None:
        cluster_map = _cluster_map(config, inputs, es, log)
        model = fit_hpca(panel, cluster_map, logger=log)
        es_hat = eigendecompose(model.model_matrix(), module="hpca")
        curves["hpca"] = explained_variance(es_hat)
        written.append(
            write_frame(
                spectrum_frame(es_hat.eigenvalues, curves["hpca"]),
                out / "spectrum_hpca.csv",
                echo,
            )
        )
    written.append(write_frame(cumulative_frame(curves), out / "cumulative.csv", echo))
    written.append(
        write_frame(
            _eigenvector_frame(es, config.vectors, _labels(inputs, cluster_map)),
            out / "eigenvectors_pca.csv",
            echo,
        )
    )

    if panel.n_periods >= config.window:
        diversity = rolling_diversity(panel, config.window, config.rebalance, logger=log)
        frame = diversity.reset_index()
        frame["date"] = frame["date"].dt.strftime("%Y-%m-%d")
        written.append(write_frame(frame, out / "diversity.csv", echo))
    else:
        log.warn(
            "Skipping rolling diversity: %d periods is shorter than window %d",
            panel.n_periods,
            config.window,
        )
    return written


def cmd_cluster(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    """Sign clusters over eigenvectors 2..K+1, signatures and label composition."""
    log = resolve_logger(logger)
    inputs = _load(config, log)
    out = Path(config.out)
    echo = _echo(config, inputs.panel)

    es = eigendecompose(correlation_matrix(inputs.panel))
    cluster_map = sign_clusters(es, config.k, logger=log)
    log.info("K=%d: %d nonempty clusters", config.k, cluster_map.b)
    written = [
        write_frame(cluster_map.to_frame(), out / "clusters.csv", echo),
        write_frame(sign_signatures(es, config.k).to_frame(), out / "signatures.csv", echo),
    ]
    if inputs.meta is not None:
        report = cluster_composition(cluster_map, inputs.meta)
        written.append(write_frame(report.to_frame(), out / "composition.csv", echo))
    return written


def _localization(
    es: EigenSystem, es_hat: EigenSystem, cluster_map: ClusterMap, config: RunConfig
) -> pd.DataFrame:
    pca = localization_report(es, cluster_map, config.top, config.threshold)
    hpca = localization_report(es_hat, cluster_map, config.top, config.threshold)
    return pd.DataFrame(
        {
            "rank": pca["rank"],
            "pca_eigenvalue": pca["eigenvalue"],
            "pca_label": pca["label"],
            "hpca_eigenvalue": hpca["eigenvalue"],
            "hpca_label": hpca["label"],
        }
    )


def _block_summary(model: HpcaModel) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "matrix": ["empirical", "model"],
            "off_block_mean_abs": [
                off_block_mean_abs(model.empirical, model.cluster_map),
                off_block_mean_abs(model.c_hat, model.cluster_map),
            ],
            "min_eigenvalue": [
                float(np.linalg.eigvalsh(model.empirical.values)[0]),
                model.min_eigenvalue,
            ],
            "psd_repaired": [False, model.psd_repaired],
        }
    )


def cmd_hpca(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    """Empirical and model matrices, localization labels and the factor model on C_hat."""
    log = resolve_logger(logger)
    inputs = _load(config, log)
    panel = inputs.panel
    out = Path(config.out)
    echo = _echo(config, panel)

    es = eigendecompose(correlation_matrix(panel))
    cluster_map = _cluster_map(config, inputs, es, log)
    model = fit_hpca(panel, cluster_map, logger=log)
    es_hat = eigendecompose(model.model_matrix(), module="hpca")

    written = [
        write_matrix(model.empirical, out / "empirical.csv", echo),
        write_matrix(model.model_matrix(), out / "model.csv", echo),
        write_frame(cluster_report(model), out / "hpca_clusters.csv", echo),
        write_frame(_localization(es, es_hat, cluster_map, config), out / "localization.csv", echo),
        write_frame(_block_summary(model), out / "blocks.csv", echo),
        write_frame(
            _eigenvector_frame(es_hat, config.vectors, list(cluster_map.labels)),
            out / "eigenvectors_hpca.csv",
            echo,
        ),
    ]

    if panel.n_assets > 1:
        k = select_k(panel)
        factor_model = truncate_model(es_hat, k)
        factors = [eigenportfolio(es_hat, panel.vols, panel, order) for order in range(1, k + 1)]
        factor_model = with_expected(factor_model, expected_returns(panel, factors))
        written.append(write_frame(factor_report(es_hat, k), out / "factors.csv", echo))
        written.append(write_frame(loadings_report(factor_model), out / "loadings.csv", echo))

    if config.verify:
        check = verify_gaussian(model.c_hat, config.verify_samples, config.seed, logger=log)
        if not check.passed:
            log.warn(
                "Gaussian check exceeded tolerance: %.5f > %.5f",
                check.max_deviation,
                check.tolerance,
            )
        frame = pd.DataFrame(
            [
                {
                    "samples": check.samples,
                    "max_deviation": check.max_deviation,
                    "tolerance": check.tolerance,
                    "passed": check.passed,
                }
            ]
        )
        written.append(write_frame(frame, out / "verify.csv", echo))
    return written


def _strategies(config: RunConfig, has_meta: bool) -> list[Strategy]:
    if config.strategies is not None:
        return [Strategy(s) for s in config.strategies]
    return [s for s in Strategy if has_meta or s is not Strategy.HPCA_GICS]


def cmd_backtest(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    """Equity curves and performance table for every requested strategy."""
    log = resolve_logger(logger)
    inputs = _load(config, log)
    out = Path(config.out)
    strategies = _strategies(config, inputs.meta is not None)
    echo = _echo(config, inputs.panel)
    echo["strategy_labels"] = {s.value: STRATEGY_LABELS[s] for s in strategies}

    results = run_backtests(
        inputs.prices,
        strategies,
        config.backtest_config(),
        meta=inputs.meta,
        logger=log,
    )
    equity = pd.concat([r.to_frame() for r in results], ignore_index=True)
    equity["date"] = pd.DatetimeIndex(equity["date"]).strftime("%Y-%m-%d")
    return [
        write_frame(equity, out / "equity.csv", echo),
        write_frame(stats_frame(results), out / "stats.csv", echo),
    ]


def cmd_synth(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    """Seeded hierarchical universe: ``prices.csv`` and ``meta.csv``."""
    log = resolve_logger(logger)
    universe = hierarchical_panel(
        config.clusters,
        config.per_cluster,
        config.periods,
        global_strength=config.global_strength,
        cluster_strength=config.cluster_strength,
        noise=config.noise,
        countries=config.countries,
        country_strength=config.country_strength,
        seed=config.seed,
    )
    out = Path(config.out)
    echo = _echo(config, universe.prices)
    prices = universe.prices.to_frame()
    prices.index = prices.index.strftime("%Y-%m-%d")
    log.info(
        "Synthetic universe: %d assets x %d dates",
        universe.prices.n_assets,
        universe.prices.n_dates,
    )
    return [
        write_frame(prices, out / "prices.csv", echo, index=True, index_label="date"),
        write_frame(universe.meta_frame(), out / "meta.csv", echo),
    ]


COMMAND_HANDLERS = {
    "spectrum": cmd_spectrum,
    "cluster": cmd_cluster,
    "hpca": cmd_hpca,
    "backtest": cmd_backtest,
    "synth": cmd_synth,
}


def run_command(config: RunConfig, logger: Logger | None = None) -> list[Path]:
    handler = COMMAND_HANDLERS.get(config.command)
    if handler is None:
        raise HpcaError.validation_error(
            f"Unknown command: {config.command}", code=ErrorCode.VALIDATION_ERROR, module="cli"
        )
    return handler(config, logger)
