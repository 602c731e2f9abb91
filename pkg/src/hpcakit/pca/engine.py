"""Empirical correlation, eigendecomposition and eigenportfolios."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import pandas as pd
from scipy import linalg

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import NotPositiveSemidefiniteError
from hpcakit.returns.transforms import iter_windows
from hpcakit.types.panel import StandardizedPanel
from hpcakit.types.spectral import (
    CorrelationMatrix,
    Eigenportfolio,
    EigenSystem,
    ExplainedVariance,
)
from hpcakit.utils.logger import Logger, resolve_logger
from hpcakit.validators.input_validators import validate_k

# Eigenvalues in [-CLIP_TOL, 0) are round-off and clipped to zero.
CLIP_TOL = 1e-10
# Column sums within this band count as a tie for the sign rule.
SIGN_TIE_TOL = 1e-12


def correlation_matrix(panel: StandardizedPanel) -> CorrelationMatrix:
    """C = R^T R / T over a standardized T x N panel."""
    r = panel.returns
    c = (r.T @ r) / panel.n_periods
    c = 0.5 * (c + c.T)
    np.clip(c, -1.0, 1.0, out=c)
    np.fill_diagonal(c, 1.0)
    return CorrelationMatrix(panel.tickers, c)


def normalize_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so each sums to >= 0.

    A column whose sum is numerically zero is oriented so that its
    largest-magnitude entry (first one on ties) is positive.
    """
    out = np.array(vectors, dtype=float, copy=True)
    sums = out.sum(axis=0)
    for j in range(out.shape[1]):
        if sums[j] > SIGN_TIE_TOL:
            continue
        if sums[j] < -SIGN_TIE_TOL:
            out[:, j] = -out[:, j]
            continue
        pivot = int(np.argmax(np.abs(out[:, j])))
        if out[pivot, j] < 0:
            out[:, j] = -out[:, j]
    return out


def eigendecompose(
    c: CorrelationMatrix | np.ndarray,
    *,
    tickers: Sequence[str] | None = None,
    module: str = "pca",
) -> EigenSystem:
    """Symmetric eigendecomposition with descending eigenvalues.

    Args:
        c: Correlation (or any symmetric PSD) matrix.
        tickers: Labels when ``c`` is a bare array.
        module: Module name reported on failure.

    Returns:
        An EigenSystem with eigenvalues clipped at zero and sign-normalized
        eigenvectors.

    Raises:
        NotPositiveSemidefiniteError: An eigenvalue lies below -1e-10.
        HpcaError: The eigensolver did not converge.
    """
    if isinstance(c, CorrelationMatrix):
        values = np.asarray(c.values, dtype=float)
        labels = c.tickers
    else:
        values = np.asarray(c, dtype=float)
        labels = tuple(tickers) if tickers is not None else tuple(
            f"A{i + 1}" for i in range(values.shape[0])
        )

    sym = 0.5 * (values + values.T)
    try:
        eigvals, eigvecs = linalg.eigh(sym)
    except (linalg.LinAlgError, ValueError) as exc:
        raise HpcaError.numerical_error(
            f"Eigensolver failed: {exc}",
            code=ErrorCode.NUMERICAL_NON_CONVERGENCE,
            module=module,
        ) from exc

    eigvals = eigvals[::-1]
    eigvecs = eigvecs[:, ::-1]
    if eigvals[-1] < -CLIP_TOL:
        raise NotPositiveSemidefiniteError(float(eigvals[-1]), module=module)
    eigvals = np.where(eigvals < 0.0, 0.0, eigvals)

    return EigenSystem(labels, eigvals, normalize_signs(eigvecs))


def explained_variance(es: EigenSystem) -> ExplainedVariance:
    """Fraction lambda_k / N of the trace carried by each eigenvalue."""
    fractions = es.eigenvalues / es.dim
    return ExplainedVariance(fractions=fractions, cumulative=np.cumsum(fractions))


def diversity_level(es: EigenSystem) -> float:
    """1 - lambda_1 / N; low values mean a tightly co-moving market."""
    return float(1.0 - es.eigenvalues[0] / es.dim)


def eigenportfolio(
    es: EigenSystem,
    vols: np.ndarray,
    panel: StandardizedPanel,
    k: int,
    *,
    normalize: bool = False,
) -> Eigenportfolio:
    """Build the k-th eigenportfolio, theta_i = V^(k)_i / sigma_i.

    Args:
        es: Eigensystem of the panel's correlation (or model) matrix.
        vols: Per-asset volatilities in raw return units.
        panel: Panel whose raw returns produce the factor series.
        k: Eigenvector order, 1-based.
        normalize: Rescale loadings to unit gross exposure.

    Raises:
        HpcaError: ``k`` outside 1..N or a non-positive volatility.
    """
    k_err = validate_k(k, es.dim, offset=0)
    if k_err:
        raise HpcaError.validation_error(
            k_err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="pca"
        )
    vols = np.asarray(vols, dtype=float)
    if vols.shape != (es.dim,) or np.any(vols <= 0.0):
        raise HpcaError.validation_error(
            "Volatilities must be positive, one per asset", module="pca"
        )

    loadings = es.vector(k) / vols
    scale = 1.0
    if normalize:
        scale = 1.0 / float(np.abs(loadings).sum())
        loadings = loadings * scale

    return Eigenportfolio(
        order=k,
        tickers=es.tickers,
        loadings=loadings,
        returns=panel.raw @ loadings,
        dates=panel.dates,
        normalized=normalize,
        scale=scale,
    )


def rolling_diversity(
    panel: StandardizedPanel,
    width: int,
    step: int,
    *,
    logger: Logger | None = None,
) -> pd.Series:
    """Diversity level of each rolling window, indexed by the window's last date."""
    log = resolve_logger(logger)
    ends: list[pd.Timestamp] = []
    levels: list[float] = []
    for start, window in iter_windows(panel, width, step):
        es = eigendecompose(correlation_matrix(window))
        ends.append(window.dates[-1])
        levels.append(diversity_level(es))
        log.debug("Window starting at row %d: diversity %.6f", start, levels[-1])
    return pd.Series(levels, index=pd.DatetimeIndex(ends, name="date"), name="diversity")
