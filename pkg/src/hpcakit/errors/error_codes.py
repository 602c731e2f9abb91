"""Standardized error codes for hpcakit."""

from __future__ import annotations

from enum import Enum


class ErrorCode(Enum):
    """Enumeration of all hpcakit error codes."""

    # Input errors (1xxx)
    INPUT_UNREADABLE = "INPUT_UNREADABLE"
    INPUT_NO_ASSETS = "INPUT_NO_ASSETS"
    INPUT_NON_POSITIVE_PRICE = "INPUT_NON_POSITIVE_PRICE"
    INPUT_DUPLICATE = "INPUT_DUPLICATE"
    INPUT_MISSING_METADATA = "INPUT_MISSING_METADATA"

    # Validation errors (2xxx)
    VALIDATION_ERROR = "VALIDATION_ERROR"
    VALIDATION_OUT_OF_RANGE = "VALIDATION_OUT_OF_RANGE"
    VALIDATION_CONSTANT_SERIES = "VALIDATION_CONSTANT_SERIES"
    VALIDATION_MISSING_LABEL = "VALIDATION_MISSING_LABEL"
    VALIDATION_EMPTY_CLUSTER = "VALIDATION_EMPTY_CLUSTER"
    VALIDATION_INSUFFICIENT_HISTORY = "VALIDATION_INSUFFICIENT_HISTORY"

    # Numerical errors (3xxx)
    NUMERICAL_NON_CONVERGENCE = "NUMERICAL_NON_CONVERGENCE"
    NUMERICAL_NOT_PSD = "NUMERICAL_NOT_PSD"
    NUMERICAL_SINGULAR = "NUMERICAL_SINGULAR"
    NUMERICAL_RANK_DEFICIENT = "NUMERICAL_RANK_DEFICIENT"
    NUMERICAL_ZERO_SPECTRUM = "NUMERICAL_ZERO_SPECTRUM"

    # Estimation errors (4xxx)
    ESTIMATION_FAILED = "ESTIMATION_FAILED"
    ESTIMATION_RUIN = "ESTIMATION_RUIN"

    # Unknown errors (9xxx)
    UNKNOWN = "UNKNOWN"


NUMERIC_CODE_MAP: dict[ErrorCode, int] = {
    # Input errors (1xxx)
    ErrorCode.INPUT_UNREADABLE: 1000,
    ErrorCode.INPUT_NO_ASSETS: 1001,
    ErrorCode.INPUT_NON_POSITIVE_PRICE: 1002,
    ErrorCode.INPUT_DUPLICATE: 1003,
    ErrorCode.INPUT_MISSING_METADATA: 1004,

    # Validation errors (2xxx)
    ErrorCode.VALIDATION_ERROR: 2000,
    ErrorCode.VALIDATION_OUT_OF_RANGE: 2001,
    ErrorCode.VALIDATION_CONSTANT_SERIES: 2002,
    ErrorCode.VALIDATION_MISSING_LABEL: 2003,
    ErrorCode.VALIDATION_EMPTY_CLUSTER: 2004,
    ErrorCode.VALIDATION_INSUFFICIENT_HISTORY: 2005,

    # Numerical errors (3xxx)
    ErrorCode.NUMERICAL_NON_CONVERGENCE: 3000,
    ErrorCode.NUMERICAL_NOT_PSD: 3001,
    ErrorCode.NUMERICAL_SINGULAR: 3002,
    ErrorCode.NUMERICAL_RANK_DEFICIENT: 3003,
    ErrorCode.NUMERICAL_ZERO_SPECTRUM: 3004,

    # Estimation errors (4xxx)
    ErrorCode.ESTIMATION_FAILED: 4000,
    ErrorCode.ESTIMATION_RUIN: 4001,

    # Unknown errors (9xxx)
    ErrorCode.UNKNOWN: 9000,
}


def is_numerical_code(code: ErrorCode) -> bool:
    """Determine whether an error code represents a numerical failure.

    Numerical failures come from the linear algebra itself (non-convergence,
    indefinite matrices, singular systems) or from an estimation step that
    wrapped one. Everything else is a validation problem with the inputs.

    Args:
        code: The error code to check.

    Returns:
        True if the error is a numerical failure.
    """
    numerical_codes = {
        ErrorCode.NUMERICAL_NON_CONVERGENCE,
        ErrorCode.NUMERICAL_NOT_PSD,
        ErrorCode.NUMERICAL_SINGULAR,
        ErrorCode.NUMERICAL_RANK_DEFICIENT,
        ErrorCode.NUMERICAL_ZERO_SPECTRUM,
        ErrorCode.ESTIMATION_FAILED,
        ErrorCode.ESTIMATION_RUIN,
    }
    return code in numerical_codes
