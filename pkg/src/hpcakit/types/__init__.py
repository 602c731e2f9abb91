"""hpcakit type definitions."""

from hpcakit.types.cluster import (
    MULTI_CLUSTER,
    ClusterComposition,
    ClusterMap,
    ClusterPca,
    ClusterScheme,
    GaussianCheck,
    HpcaModel,
    SignSignatures,
    StatClusterReport,
)
from hpcakit.types.config import BacktestConfig, OptimizerConfig, RunConfig
from hpcakit.types.factor import ExpectedReturns, FactorModel
from hpcakit.types.panel import (
    AssetMeta,
    PricePanel,
    ReturnKind,
    StandardizedPanel,
    SyntheticUniverse,
)
from hpcakit.types.portfolio import (
    STRATEGY_LABELS,
    BacktestResult,
    PerfStats,
    Strategy,
    WeightVector,
)
from hpcakit.types.spectral import (
    CorrelationMatrix,
    Eigenportfolio,
    EigenSystem,
    ExplainedVariance,
    SpectrumDistribution,
)

__all__ = [
    "AssetMeta",
    "PricePanel",
    "ReturnKind",
    "StandardizedPanel",
    "SyntheticUniverse",
    "CorrelationMatrix",
    "EigenSystem",
    "Eigenportfolio",
    "ExplainedVariance",
    "SpectrumDistribution",
    "MULTI_CLUSTER",
    "ClusterComposition",
    "ClusterMap",
    "ClusterPca",
    "ClusterScheme",
    "GaussianCheck",
    "HpcaModel",
    "SignSignatures",
    "StatClusterReport",
    "ExpectedReturns",
    "FactorModel",
    "STRATEGY_LABELS",
    "BacktestResult",
    "PerfStats",
    "Strategy",
    "WeightVector",
    "BacktestConfig",
    "OptimizerConfig",
    "RunConfig",
]
