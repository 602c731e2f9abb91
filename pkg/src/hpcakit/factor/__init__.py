"""Factor-count selection and factor-model construction."""

from hpcakit.factor.model import (
    erank,
    expected_returns,
    factor_report,
    loadings_report,
    sample_covariance,
    select_k,
    spectrum_distribution,
    truncate_model,
    with_expected,
)

__all__ = [
    "erank",
    "expected_returns",
    "factor_report",
    "loadings_report",
    "sample_covariance",
    "select_k",
    "spectrum_distribution",
    "truncate_model",
    "with_expected",
]
