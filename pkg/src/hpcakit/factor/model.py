"""Effective-rank factor selection, truncated factor models and factor regressions."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace

import numpy as np
import pandas as pd
from scipy.stats import entropy

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.errors.hpca_errors import RankDeficientError
from hpcakit.types.factor import ExpectedReturns, FactorModel
from hpcakit.types.panel import StandardizedPanel
from hpcakit.types.spectral import Eigenportfolio, EigenSystem, SpectrumDistribution
from hpcakit.validators.input_validators import validate_k


def _matrix(panel: StandardizedPanel | np.ndarray) -> np.ndarray:
    if isinstance(panel, StandardizedPanel):
        return np.asarray(panel.returns)
    return np.asarray(panel, dtype=float)


def spectrum_distribution(panel: StandardizedPanel | np.ndarray) -> SpectrumDistribution:
    """Thin SVD R = U D V of the T x N matrix and p_j = sigma_j / sum(sigma).

    Raises:
        HpcaError: Every singular value is zero.
    """
    r = _matrix(panel)
    try:
        u, s, vt = np.linalg.svd(r, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise HpcaError.numerical_error(f"SVD failed: {exc}", module="factor") from exc
    total = float(s.sum())
    if total <= 0.0:
        raise HpcaError.numerical_error(
            "All singular values are zero",
            code=ErrorCode.NUMERICAL_ZERO_SPECTRUM,
            module="factor",
        )
    return SpectrumDistribution(singular_values=s, probabilities=s / total, u=u, vt=vt)


def erank(panel: StandardizedPanel | np.ndarray) -> float:
    """exp of the Shannon entropy of the normalized singular values."""
    dist = spectrum_distribution(panel)
    return float(np.exp(entropy(dist.probabilities)))


def select_k(panel: StandardizedPanel | np.ndarray) -> int:
    """Nearest integer to eRank (halves round up), clamped to [1, N - 1]."""
    n = _matrix(panel).shape[1]
    k = int(np.floor(erank(panel) + 0.5))
    return max(1, min(k, max(1, n - 1)))


def truncate_model(es: EigenSystem, k: int) -> FactorModel:
    """Keep the top ``k`` eigenpairs; the discarded ones become the idiosyncratic diagonal.

    zeta2_j = sum over i > k of lambda_i * V_ji^2, so the model correlation
    keeps a unit diagonal.
    """
    err = validate_k(k, es.dim, offset=1)
    if err:
        raise HpcaError.validation_error(
            err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="factor"
        )
    vectors = es.eigenvectors
    values = es.eigenvalues
    zeta2 = (vectors[:, k:] ** 2) @ values[k:]
    return FactorModel(
        tickers=es.tickers,
        k=k,
        loadings=vectors[:, :k],
        factor_variances=values[:k],
        zeta2=zeta2,
    )


def _factor_matrix(factors: np.ndarray | Sequence[Eigenportfolio]) -> np.ndarray:
    if isinstance(factors, np.ndarray):
        out = factors
    else:
        out = np.column_stack([f.returns for f in factors])
    out = np.asarray(out, dtype=float)
    return out.reshape(-1, 1) if out.ndim == 1 else out


def expected_returns(
    returns: StandardizedPanel | np.ndarray,
    factors: np.ndarray | Sequence[Eigenportfolio],
    *,
    include_residual_mean: bool = False,
) -> ExpectedReturns:
    """Regress each asset's raw returns on the factor series (no intercept).

    Args:
        returns: Panel (its raw returns are used) or a T x N raw matrix.
        factors: T x K factor returns, or eigenportfolios whose series are stacked.
        include_residual_mean: Add each asset's mean residual to ``mu``.

    Returns:
        mu_i = sum_k beta_ik * mean(F_k), betas and residuals.

    Raises:
        RankDeficientError: The factor matrix has rank below K.
    """
    r = returns.raw if isinstance(returns, StandardizedPanel) else np.asarray(returns, float)
    f = _factor_matrix(factors)
    if f.shape[0] != r.shape[0]:
        raise HpcaError.validation_error(
            f"Factor series length {f.shape[0]} differs from {r.shape[0]} return periods",
            module="factor",
        )

    coef, _, rank, _ = np.linalg.lstsq(f, r, rcond=None)
    if rank < f.shape[1]:
        raise RankDeficientError(int(rank), int(f.shape[1]))

    residuals = r - f @ coef
    betas = coef.T
    mu = betas @ f.mean(axis=0)
    if include_residual_mean:
        mu = mu + residuals.mean(axis=0)
    return ExpectedReturns(
        mu=mu,
        betas=betas,
        residuals=residuals,
        include_residual_mean=include_residual_mean,
    )


def with_expected(model: FactorModel, expected: ExpectedReturns) -> FactorModel:
    return replace(model, expected=expected)


def sample_covariance(panel: StandardizedPanel) -> np.ndarray:
    """Covariance of the raw returns under the 1/T convention."""
    return np.asarray(np.cov(panel.raw, rowvar=False, bias=True)).reshape(
        panel.n_assets, panel.n_assets
    )


def factor_report(es: EigenSystem, k: int) -> pd.DataFrame:
    """Eigenvalues by rank with a flag on the ones kept by the factor model."""
    ranks = np.arange(1, es.dim + 1)
    return pd.DataFrame(
        {"k": ranks, "lambda": es.eigenvalues, "erank_flag": (ranks <= k).astype(int)}
    )


def loadings_report(model: FactorModel) -> pd.DataFrame:
    """Per-asset betas, idiosyncratic variance and expected return.

    Regression betas are reported once ``model.expected`` is set; the
    eigenvector loadings are reported otherwise.
    """
    betas = model.loadings if model.expected is None else model.expected.betas
    frame = pd.DataFrame({"ticker": list(model.tickers)})
    for j in range(betas.shape[1]):
        frame[f"beta_{j + 1}"] = betas[:, j]
    frame["zeta2"] = model.zeta2
    frame["mu"] = np.nan if model.mu is None else model.mu
    return frame
