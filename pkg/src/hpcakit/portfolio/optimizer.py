"""Max-Sharpe weights and shrinkage covariance."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy import linalg
from sklearn.covariance import ledoit_wolf_shrinkage

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import SingularSystemError
from hpcakit.types.config import OptimizerConfig
from hpcakit.types.portfolio import WeightVector
from hpcakit.utils.logger import Logger, resolve_logger
from hpcakit.validators.input_validators import validate_intensity


def max_sharpe(
    mu: np.ndarray,
    sigma: np.ndarray,
    config: OptimizerConfig | None = None,
    *,
    tickers: Sequence[str] | None = None,
    logger: Logger | None = None,
) -> WeightVector:
    """Tangency weights w proportional to (sigma + ridge * I)^-1 mu, scaled to sum(|w|) = 1.

    With ``long_only`` the negative entries are clipped to zero and the rest
    renormalized in a single pass.

    Raises:
        HpcaError: ``mu`` is all zero or not finite, or ``ridge`` is negative.
        SingularSystemError: The regularized system cannot be solved.
    """
    config = config or OptimizerConfig()
    log = resolve_logger(logger)
    mu = np.asarray(mu, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    n = mu.shape[0]
    labels = tuple(tickers) if tickers is not None else tuple(f"A{i + 1}" for i in range(n))

    if config.ridge < 0:
        raise HpcaError.validation_error("Ridge must be non-negative", module="portfolio")
    if not np.all(np.isfinite(mu)):
        raise HpcaError.validation_error("Expected returns must be finite", module="portfolio")
    if not np.any(mu):
        raise HpcaError.validation_error(
            "Expected returns are all zero",
            code=ErrorCode.VALIDATION_OUT_OF_RANGE,
            module="portfolio",
        )
    if sigma.shape != (n, n):
        raise HpcaError.validation_error(
            f"Covariance shape {sigma.shape} does not match {n} assets", module="portfolio"
        )

    system = 0.5 * (sigma + sigma.T) + config.ridge * np.eye(n)
    try:
        raw = linalg.solve(system, mu, assume_a="sym")
    except (linalg.LinAlgError, ValueError) as exc:
        raise SingularSystemError(f"Covariance system is singular: {exc}") from exc
    gross = float(np.abs(raw).sum())
    if not np.all(np.isfinite(raw)) or gross == 0.0:
        raise SingularSystemError("Covariance system produced no usable weights")
    weights = raw / gross

    clipped = 0
    if config.long_only:
        clipped = int((weights < 0).sum())
        weights = np.where(weights < 0, 0.0, weights)
        total = float(weights.sum())
        if total == 0.0:
            raise SingularSystemError("No positive weight survives the long-only projection")
        weights = weights / total
        if clipped:
            log.info("Long-only projection clipped %d of %d weights", clipped, n)

    return WeightVector(labels, weights, long_only=config.long_only, clipped=clipped)


def shrinkage_intensity(returns: np.ndarray) -> float:
    """Analytic variance-minimizing intensity for the scaled-identity target."""
    return float(ledoit_wolf_shrinkage(np.asarray(returns, dtype=float)))


def shrink_covariance(
    sample: np.ndarray,
    intensity: float | str = "auto",
    *,
    returns: np.ndarray | None = None,
) -> np.ndarray:
    """(1 - delta) * sample + delta * (trace / N) * I.

    Args:
        sample: Symmetric sample covariance.
        intensity: delta in [0, 1], or ``auto`` to estimate it from ``returns``.
        returns: T x N returns behind ``sample``; required for ``auto``.
    """
    err = validate_intensity(intensity)
    if err:
        raise HpcaError.validation_error(
            err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="portfolio"
        )
    sample = np.asarray(sample, dtype=float)
    if isinstance(intensity, str):
        if returns is None:
            raise HpcaError.validation_error(
                "Automatic shrinkage needs the return matrix", module="portfolio"
            )
        delta = shrinkage_intensity(returns)
    else:
        delta = float(intensity)

    n = sample.shape[0]
    target = np.trace(sample) / n * np.eye(n)
    return (1.0 - delta) * sample + delta * target
