"""Correlation matrices, eigensystems and eigenportfolios."""

from hpcakit.pca.engine import (
    correlation_matrix,
    diversity_level,
    eigendecompose,
    eigenportfolio,
    explained_variance,
    normalize_signs,
    rolling_diversity,
)

__all__ = [
    "correlation_matrix",
    "diversity_level",
    "eigendecompose",
    "eigenportfolio",
    "explained_variance",
    "normalize_signs",
    "rolling_diversity",
]
