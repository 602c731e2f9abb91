"""
hpcakit Lab
Desk-scale acceptance runs on synthetic hierarchical universes.
"""

from __future__ import annotations

import os
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from hpcakit import (  # noqa: E402
    BacktestConfig,
    Strategy,
    backtest,
    compute_returns,
    correlation_matrix,
    eigendecompose,
    erank,
    explained_variance,
    fit_hpca,
    partition,
    sign_clusters,
    standardize,
    truncate_model,
    verify_gaussian,
)
from hpcakit.hpca.model import off_block_mean_abs  # noqa: E402
from hpcakit.portfolio import run_backtests  # noqa: E402
from hpcakit.synthetic import (  # noqa: E402
    equicorrelated,
    exact_panel,
    hierarchical_panel,
    random_correlation,
)
from hpcakit.types import CorrelationMatrix, PricePanel  # noqa: E402

PASS = "\033[32m[PASS]\033[0m"
FAIL = "\033[31m[FAIL]\033[0m"
QUICK_MODE = os.getenv("HPCAKIT_LAB_MODE", "").strip().lower() == "quick"
SEED = 20240101

passed = 0
failed = 0


def check(label: str, ok: bool, detail: str = "") -> None:
    global passed, failed
    if ok:
        print(f"{PASS} {label}" + (f" ({detail})" if detail else ""))
        passed += 1
    else:
        print(f"{FAIL} {label}" + (f": {detail}" if detail else ""))
        failed += 1


def sized(full: int, quick: int) -> int:
    return quick if QUICK_MODE else full


def universe_panel(clusters: int, per_cluster: int, periods: int, seed: int):
    universe = hierarchical_panel(clusters, per_cluster, periods, seed=seed)
    return universe, standardize(compute_returns(universe.prices))


def run_hpca_structure() -> None:
    rng = np.random.default_rng(SEED)
    started = time.perf_counter()
    worst_diag = 0.0
    worst_block = 0.0
    worst_eig = np.inf
    runs = sized(50, 5)
    for run in range(runs):
        clusters = int(rng.integers(2, 12))
        per_cluster = int(rng.integers(2, 41))
        universe, panel = universe_panel(clusters, per_cluster, 1000, seed=SEED + run)
        cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
        model = fit_hpca(panel, cluster_map)
        c_hat = model.c_hat
        c = model.empirical.values
        same = cluster_map.codes[:, None] == cluster_map.codes[None, :]
        worst_block = max(worst_block, float(np.abs(c_hat[same] - c[same]).max()))
        worst_diag = max(worst_diag, float(np.abs(np.diag(c_hat) - 1.0).max()))
        worst_eig = min(worst_eig, model.min_eigenvalue)
    elapsed = time.perf_counter() - started
    check("HPCA keeps within-cluster blocks", worst_block == 0.0, f"max diff {worst_block:.1e}")
    check("HPCA unit diagonal", worst_diag <= 1e-12, f"max diff {worst_diag:.1e}")
    check("HPCA positive semidefinite", worst_eig >= -1e-8, f"min eigenvalue {worst_eig:.2e}")
    check(f"HPCA on {runs} panels under 60 s", elapsed < 60.0, f"{elapsed:.1f} s")


def run_gaussian_oracle() -> None:
    universe, panel = universe_panel(2, 5, 1000, seed=SEED)
    model = fit_hpca(panel, partition(universe.meta, "sector", tickers=panel.tickers))
    result = verify_gaussian(model.c_hat, sized(200_000, 50_000), seed=SEED)
    check(
        "Gaussian draws reproduce the model matrix",
        result.passed,
        f"max deviation {result.max_deviation:.4f} <= {result.tolerance:.4f}",
    )


def run_greediness() -> None:
    universe, panel = universe_panel(sized(11, 6), sized(40, 12), sized(2500, 1200), seed=SEED)
    cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
    model = fit_hpca(panel, cluster_map)
    es = eigendecompose(correlation_matrix(panel))
    es_hat = eigendecompose(model.model_matrix(), module="hpca")
    ranks = min(50, es.dim)
    pca_curve = explained_variance(es).cumulative[:ranks]
    hpca_curve = explained_variance(es_hat).cumulative[:ranks]
    gap = float((hpca_curve - pca_curve).max())
    check("PCA cumulative variance dominates HPCA", gap <= 1e-12, f"worst gap {gap:.2e}")

    upper = min(15, es.dim)
    lower_ranks = [
        k for k in range(2, upper + 1) if es_hat.eigenvalues[k - 1] <= es.eigenvalues[k - 1]
    ]
    check(
        "HPCA eigenvalues below PCA at ranks 2..15",
        len(lower_ranks) == upper - 1,
        f"{len(lower_ranks)}/{upper - 1} ranks",
    )
    lead_gap = abs(es_hat.eigenvalues[0] / es.eigenvalues[0] - 1.0)
    check("Leading eigenvalues agree within 2%", lead_gap < 0.02, f"{100 * lead_gap:.2f}%")

    # Each HPCA off-block is a rank-1 projection of the empirical one.
    cross = cluster_map.codes[:, None] != cluster_map.codes[None, :]
    empirical = float(np.linalg.norm(model.empirical.values[cross]))
    modeled = float(np.linalg.norm(model.c_hat[cross]))
    check(
        "Cross-cluster Frobenius norm is not inflated",
        modeled <= empirical * (1 + 1e-12),
        f"||C|| {empirical:.4f}, ||C_hat|| {modeled:.4f}",
    )


def run_off_block_lightness() -> None:
    # No global factor: cross-cluster correlation is sampling noise that HPCA shrinks.
    universe = hierarchical_panel(
        sized(11, 6), sized(40, 12), sized(2500, 1200), global_strength=0.0, seed=SEED
    )
    panel = standardize(compute_returns(universe.prices))
    cluster_map = partition(universe.meta, "sector", tickers=panel.tickers)
    model = fit_hpca(panel, cluster_map)
    empirical = off_block_mean_abs(model.empirical, cluster_map)
    modeled = off_block_mean_abs(model.c_hat, cluster_map)
    check(
        "Cross-cluster blocks of C_hat are lighter than C",
        modeled <= empirical,
        f"mean |C_hat| {modeled:.5f} <= mean |C| {empirical:.5f}",
    )


def run_beta_identity() -> None:
    universe, panel = universe_panel(4, 8, 1000, seed=SEED)
    model = fit_hpca(panel, partition(universe.meta, "sector", tickers=panel.tickers))
    worst = 0.0
    for pca in model.pcas:
        for beta, i in zip(pca.betas, pca.indices):
            sample = np.corrcoef(panel.returns[:, i], pca.factor)[0, 1]
            worst = max(worst, abs(beta - sample))
    check("Betas equal correlation with the cluster factor", worst <= 1e-8, f"{worst:.1e}")


def run_sign_clustering() -> None:
    _, panel = universe_panel(5, 8, 1000, seed=SEED)
    es = eigendecompose(correlation_matrix(panel))
    four = sign_clusters(es, 4)
    exact = sorted(four.tickers) == sorted(panel.tickers) and len(four.labels) == es.dim
    check("K=4 gives at most 16 clusters", four.b <= 16 and exact, f"{four.b} clusters")

    refines = True
    previous = sign_clusters(es, 1)
    for k in range(2, 6):
        current = sign_clusters(es, k)
        for name in current.names:
            parents = {previous.labels[i] for i in current.members(name)}
            refines = refines and len(parents) == 1
        previous = current
    check("Each K refines K-1", refines)

    again = sign_clusters(eigendecompose(correlation_matrix(panel)), 4)
    check("Sign clustering is deterministic", again == four)


def run_erank() -> None:
    rng = np.random.default_rng(SEED)
    uniform = exact_panel(np.eye(7), 200, seed=SEED)
    check("eRank of a uniform spectrum", abs(erank(uniform) - 7.0) <= 1e-10, f"{erank(uniform)}")

    rank_one = np.outer(rng.standard_normal(300), rng.standard_normal(9))
    check("eRank of a rank-1 panel", abs(erank(rank_one) - 1.0) <= 1e-10)

    panel = exact_panel(equicorrelated(4, 0.5), 400, seed=SEED)
    roots = np.sqrt(np.array([2.5, 0.5, 0.5, 0.5]))
    p = roots / roots.sum()
    oracle = float(np.exp(-(p * np.log(p)).sum()))
    gap = abs(erank(panel) - oracle)
    check("eRank of the equicorrelated oracle", gap <= 1e-10, f"{gap:.1e}")


def run_truncation() -> None:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(sized(100, 10)):
        n = int(rng.integers(3, 25))
        c = random_correlation(n, rng)
        es = eigendecompose(CorrelationMatrix(tuple(f"A{i}" for i in range(n)), c))
        for k in range(1, n):
            model = truncate_model(es, k)
            total = model.zeta2.sum() + model.factor_variances.sum()
            worst = max(worst, abs(total - n))
    check("Idiosyncratic plus kept variance equals N", worst <= 1e-8, f"{worst:.1e}")


def run_market_eigenportfolio() -> None:
    universe = hierarchical_panel(
        1, sized(100, 40), sized(1500, 700),
        global_strength=1.0, cluster_strength=0.0, noise=1.0, seed=SEED,
    )
    panel = standardize(compute_returns(universe.prices))
    es = eigendecompose(correlation_matrix(panel))
    check("First eigenvector is positive", bool(np.all(es.vector(1) > 0)))

    config = BacktestConfig(window=125, rebalance=21)
    eigen = backtest(universe.prices, Strategy.FIRST_EIGEN, config)
    proxy = backtest(universe.prices, Strategy.INDEX_PROXY, config)
    corr = float(np.corrcoef(eigen.equity, proxy.equity)[0, 1])
    check("First eigenportfolio tracks the market", corr > 0.99, f"corr {corr:.4f}")


def run_backtest_integrity() -> None:
    universe = hierarchical_panel(3, 6, 200, seed=SEED)
    config = BacktestConfig(window=80, rebalance=40, cost_bps=5.0)
    base = universe.prices
    bumped_prices = np.array(base.prices)
    bumped_prices[161:] *= 1.5
    bumped = PricePanel(base.dates, base.tickers, bumped_prices)
    first = backtest(base, Strategy.HPCA_STAT, config).weights
    second = backtest(bumped, Strategy.HPCA_STAT, config).weights
    check(
        "No look-ahead across three rebalances",
        len(first) == 3 and np.array_equal(first.to_numpy(), second.to_numpy()),
    )

    curves = [
        backtest(
            base, Strategy.SHRINKAGE, BacktestConfig(window=80, rebalance=40, cost_bps=bps)
        ).equity.to_numpy()
        for bps in (0.0, 5.0, 25.0)
    ]
    monotone = bool(np.all(curves[1] <= curves[0]) and np.all(curves[2] <= curves[1]))
    check("Costs only lower equity", monotone)

    big = hierarchical_panel(sized(10, 4), sized(20, 10), sized(2500, 800), seed=SEED)
    started = time.perf_counter()
    results = run_backtests(big.prices, list(Strategy), BacktestConfig(), meta=big.meta)
    elapsed = time.perf_counter() - started
    finite = all(np.all(np.isfinite(r.equity)) for r in results)
    check("Full strategy backtest under 5 minutes", finite and elapsed < 300.0, f"{elapsed:.1f} s")


def run_perron() -> None:
    rng = np.random.default_rng(SEED)
    positive = 0
    trials = sized(100, 20)
    for _ in range(trials):
        n = int(rng.integers(2, 30))
        c = random_correlation(n, rng, positive=True)
        es = eigendecompose(CorrelationMatrix(tuple(f"A{i}" for i in range(n)), c))
        positive += bool(np.all(es.vector(1) > 0))
    check("Positive matrices have a positive first eigenvector", positive == trials,
          f"{positive}/{trials}")


def run() -> None:
    print("=== hpcakit Lab ===\n")
    print(f"Mode: {'quick' if QUICK_MODE else 'full'}\n")

    scenarios = [
        ("HPCA structure", run_hpca_structure),
        ("Gaussian oracle", run_gaussian_oracle),
        ("Greediness", run_greediness),
        ("Off-block lightness", run_off_block_lightness),
        ("Beta identity", run_beta_identity),
        ("Sign clustering", run_sign_clustering),
        ("Effective rank", run_erank),
        ("Truncation", run_truncation),
        ("Market eigenportfolio", run_market_eigenportfolio),
        ("Backtest integrity", run_backtest_integrity),
        ("Perron positivity", run_perron),
    ]
    for label, scenario in scenarios:
        try:
            scenario()
        except Exception as e:
            check(label, False, str(e))

    print("\n========================================")
    print(f"Results: {passed} passed, {failed} failed")
    print("========================================\n")

    if failed == 0:
        print("All verifications passed!")
        sys.exit(0)
    sys.exit(1)


if __name__ == "__main__":
    run()
