"""Base exception class for hpcakit errors."""

from __future__ import annotations

from typing import Any

from hpcakit.errors.error_codes import NUMERIC_CODE_MAP, ErrorCode, is_numerical_code


class HpcaError(Exception):
    """Base exception for all hpcakit errors.

    Carries a structured error code, the module the failure originated in
    and free-form details, so the CLI can report provenance and pick an
    exit status without parsing messages.
    """

    def __init__(
        self,
        message: str,
        *,
        code: ErrorCode = ErrorCode.UNKNOWN,
        module: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.code = code
        self.numeric_code = NUMERIC_CODE_MAP.get(code, 9000)
        self.module = module
        self.details = details or {}

    @property
    def numerical(self) -> bool:
        """True when the failure is numerical rather than a bad input."""
        return is_numerical_code(self.code)

    @property
    def exit_code(self) -> int:
        """Process exit status for the CLI: 2 for numerical failures, 1 otherwise."""
        return 2 if self.numerical else 1

    def to_dict(self) -> dict[str, Any]:
        """Serialize the error to a dictionary."""
        return {
            "message": str(self),
            "code": self.code.value,
            "numeric_code": self.numeric_code,
            "module": self.module,
            "details": self.details,
        }

    @classmethod
    def input_error(
        cls,
        message: str,
        *,
        code: ErrorCode = ErrorCode.INPUT_UNREADABLE,
        path: str | None = None,
        module: str | None = "returns",
    ) -> HpcaError:
        """Create an input error.

        Args:
            message: Error description.
            code: Specific input error code.
            path: The file that was being read.
            module: Originating module.

        Returns:
            An HpcaError configured as an input error.
        """
        details: dict[str, Any] = {}
        if path:
            details["path"] = path

        return cls(message, code=code, module=module, details=details)

    @classmethod
    def validation_error(
        cls,
        message: str,
        *,
        code: ErrorCode = ErrorCode.VALIDATION_ERROR,
        module: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> HpcaError:
        """Create a validation error.

        Args:
            message: Error description.
            code: Specific validation error code.
            module: Originating module.
            details: Extra structured context.

        Returns:
            An HpcaError configured as a validation error.
        """
        return cls(message, code=code, module=module, details=details)

    @classmethod
    def numerical_error(
        cls,
        message: str,
        *,
        code: ErrorCode = ErrorCode.NUMERICAL_NON_CONVERGENCE,
        module: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> HpcaError:
        """Create a numerical error.

        Args:
            message: Error description.
            code: Specific numerical error code.
            module: Originating module.
            details: Extra structured context.

        Returns:
            An HpcaError configured as a numerical error.
        """
        return cls(message, code=code, module=module, details=details)

    def __str__(self) -> str:
        message = super().__str__()
        if self.module:
            return f"[{self.module}] {message}"
        return message

    def __repr__(self) -> str:
        return (
            f"HpcaError("
            f"message={super().__str__()!r}, "
            f"code={self.code.value}, "
            f"module={self.module!r}"
            f")"
        )
