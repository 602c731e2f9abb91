"""Monte-Carlo check that a model matrix is a legitimate Gaussian correlation."""

from __future__ import annotations

import numpy as np

from hpcakit.errors.hpca_error import HpcaError
from hpcakit.types.cluster import GaussianCheck
from hpcakit.utils.logger import Logger, resolve_logger

CHUNK = 50_000


def verify_gaussian(
    c_hat: np.ndarray,
    samples: int = 200_000,
    seed: int = 0,
    *,
    chunk: int = CHUNK,
    logger: Logger | None = None,
) -> GaussianCheck:
    """Draw ``samples`` vectors from N(0, c_hat) and re-estimate their correlation.

    Draws are generated in chunks and accumulated as first and second
    moments, so memory stays at ``chunk x N``.
    """
    if samples < 2:
        raise HpcaError.validation_error("Need at least 2 samples", module="hpca")
    log = resolve_logger(logger)
    c_hat = np.asarray(c_hat, dtype=float)
    n = c_hat.shape[0]
    rng = np.random.default_rng(seed)

    total = np.zeros(n)
    cross = np.zeros((n, n))
    drawn = 0
    while drawn < samples:
        size = min(chunk, samples - drawn)
        x = rng.multivariate_normal(np.zeros(n), c_hat, size=size, method="eigh")
        total += x.sum(axis=0)
        cross += x.T @ x
        drawn += size

    mean = total / samples
    cov = cross / samples - np.outer(mean, mean)
    sd = np.sqrt(np.diag(cov))
    estimate = cov / np.outer(sd, sd)

    deviation = float(np.abs(estimate - c_hat).max())
    tolerance = 4.0 / np.sqrt(samples)
    log.info("Gaussian check: max deviation %.5f (tolerance %.5f)", deviation, tolerance)
    return GaussianCheck(samples=samples, max_deviation=deviation, tolerance=float(tolerance))
