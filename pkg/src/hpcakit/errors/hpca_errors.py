"""Domain-specific error classes."""

from __future__ import annotations

from typing import Any

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError


class DataIngestionError(HpcaError):
    def __init__(
        self,
        message: str,
        code: ErrorCode = ErrorCode.INPUT_UNREADABLE,
        path: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        merged = dict(details or {})
        if path is not None:
            merged["path"] = path
        super().__init__(message, code=code, module="returns", details=merged)
        self.path = path


class ConstantSeriesError(HpcaError):
    def __init__(self, ticker: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(
            f"Return series has zero variance: {ticker}",
            code=ErrorCode.VALIDATION_CONSTANT_SERIES,
            module="returns",
            details=details,
        )
        self.ticker = ticker


class MissingLabelError(HpcaError):
    def __init__(self, ticker: str, scheme: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(
            f"Asset {ticker} has no {scheme} label",
            code=ErrorCode.VALIDATION_MISSING_LABEL,
            module="hpca",
            details=details,
        )
        self.ticker = ticker
        self.scheme = scheme


class EmptyClusterError(HpcaError):
    def __init__(
        self,
        message: str = "Partition left no usable cluster",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message, code=ErrorCode.VALIDATION_EMPTY_CLUSTER, module="hpca", details=details
        )


class NotPositiveSemidefiniteError(HpcaError):
    def __init__(
        self,
        min_eigenvalue: float,
        module: str = "pca",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            f"Matrix is not positive semidefinite (minimum eigenvalue {min_eigenvalue:.3e})",
            code=ErrorCode.NUMERICAL_NOT_PSD,
            module=module,
            details=details,
        )
        self.min_eigenvalue = min_eigenvalue


class SingularSystemError(HpcaError):
    def __init__(
        self,
        message: str = "Linear system is singular",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message, code=ErrorCode.NUMERICAL_SINGULAR, module="portfolio", details=details
        )


class RankDeficientError(HpcaError):
    def __init__(self, rank: int, columns: int, details: dict[str, Any] | None = None) -> None:
        super().__init__(
            f"Factor matrix has rank {rank} < {columns} columns",
            code=ErrorCode.NUMERICAL_RANK_DEFICIENT,
            module="factor",
            details=details,
        )
        self.rank = rank
        self.columns = columns


class InsufficientHistoryError(HpcaError):
    def __init__(
        self,
        available: int,
        required: int,
        module: str = "returns",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            f"Insufficient history: {available} periods available, {required} required",
            code=ErrorCode.VALIDATION_INSUFFICIENT_HISTORY,
            module=module,
            details=details,
        )
        self.available = available
        self.required = required


class EstimationError(HpcaError):
    def __init__(
        self,
        strategy: str,
        window_start: str,
        window_end: str,
        reason: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        merged = dict(details or {})
        merged.update(
            {"strategy": strategy, "window_start": window_start, "window_end": window_end}
        )
        super().__init__(
            f"Strategy {strategy} failed on window {window_start}..{window_end}: {reason}",
            code=ErrorCode.ESTIMATION_FAILED,
            module="portfolio",
            details=merged,
        )
        self.strategy = strategy
        self.window_start = window_start
        self.window_end = window_end


def create_error_from_code(
    code: ErrorCode, message: str, details: dict[str, Any] | None = None
) -> HpcaError:
    if code.name.startswith("INPUT_"):
        return DataIngestionError(message, code, details=details)

    error_map = {
        ErrorCode.VALIDATION_EMPTY_CLUSTER: lambda: EmptyClusterError(message, details),
        ErrorCode.NUMERICAL_SINGULAR: lambda: SingularSystemError(message, details),
    }

    factory = error_map.get(code)
    if factory:
        return factory()
    return HpcaError(message, code=code, details=details)
