"""hpcakit: Hierarchical PCA toolkit for equity correlation models."""

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.error_codes import ErrorCode
from hpcakit.utils.version import PACKAGE_VERSION, get_version

# Returns
from hpcakit.returns import (
    compute_returns,
    load_meta,
    load_prices,
    rolling_windows,
    standardize,
)

# Spectral analysis
from hpcakit.pca import (
    correlation_matrix,
    diversity_level,
    eigendecompose,
    eigenportfolio,
    explained_variance,
    rolling_diversity,
)
from hpcakit.hpca import (
    assemble_hpca,
    cluster_pca,
    fit_hpca,
    inter_cluster_corr,
    localization_label,
    off_block_mean_abs,
    partition,
    verify_gaussian,
)
from hpcakit.clustering import cluster_composition, sign_clusters, sign_signatures
from hpcakit.factor import (
    erank,
    expected_returns,
    sample_covariance,
    select_k,
    spectrum_distribution,
    truncate_model,
)

# Portfolios
from hpcakit.portfolio import backtest, max_sharpe, perf_stats, shrink_covariance

from hpcakit.types import (
    AssetMeta,
    BacktestConfig,
    BacktestResult,
    ClusterMap,
    CorrelationMatrix,
    EigenSystem,
    FactorModel,
    HpcaModel,
    OptimizerConfig,
    PerfStats,
    PricePanel,
    RunConfig,
    StandardizedPanel,
    Strategy,
    WeightVector,
)
from hpcakit.errors.hpca_errors import (
    ConstantSeriesError,
    DataIngestionError,
    EmptyClusterError,
    EstimationError,
    InsufficientHistoryError,
    MissingLabelError,
    NotPositiveSemidefiniteError,
    RankDeficientError,
    SingularSystemError,
    create_error_from_code,
)

__all__ = [
    "HpcaError",
    "ErrorCode",
    "PACKAGE_VERSION",
    "get_version",
    # Returns
    "compute_returns",
    "load_meta",
    "load_prices",
    "rolling_windows",
    "standardize",
    # Spectral analysis
    "correlation_matrix",
    "diversity_level",
    "eigendecompose",
    "eigenportfolio",
    "explained_variance",
    "rolling_diversity",
    "assemble_hpca",
    "cluster_pca",
    "fit_hpca",
    "inter_cluster_corr",
    "localization_label",
    "off_block_mean_abs",
    "partition",
    "verify_gaussian",
    "cluster_composition",
    "sign_clusters",
    "sign_signatures",
    "erank",
    "expected_returns",
    "sample_covariance",
    "select_k",
    "spectrum_distribution",
    "truncate_model",
    # Portfolios
    "backtest",
    "max_sharpe",
    "perf_stats",
    "shrink_covariance",
    # Types
    "AssetMeta",
    "BacktestConfig",
    "BacktestResult",
    "ClusterMap",
    "CorrelationMatrix",
    "EigenSystem",
    "FactorModel",
    "HpcaModel",
    "OptimizerConfig",
    "PerfStats",
    "PricePanel",
    "RunConfig",
    "StandardizedPanel",
    "Strategy",
    "WeightVector",
    # Errors
    "ConstantSeriesError",
    "DataIngestionError",
    "EmptyClusterError",
    "EstimationError",
    "InsufficientHistoryError",
    "MissingLabelError",
    "NotPositiveSemidefiniteError",
    "RankDeficientError",
    "SingularSystemError",
    "create_error_from_code",
]
