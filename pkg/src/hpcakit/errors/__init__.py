"""hpcakit error types and utilities."""

from hpcakit.errors.error_codes import NUMERIC_CODE_MAP, ErrorCode, is_numerical_code
from hpcakit.errors.hpca_error import HpcaError
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
    # Core error
    "HpcaError",
    # Error codes
    "ErrorCode",
    "NUMERIC_CODE_MAP",
    "is_numerical_code",
    # Domain errors
    "DataIngestionError",
    "ConstantSeriesError",
    "MissingLabelError",
    "EmptyClusterError",
    "NotPositiveSemidefiniteError",
    "SingularSystemError",
    "RankDeficientError",
    "InsufficientHistoryError",
    "EstimationError",
    "create_error_from_code",
]
