"""Statistical clusters from eigenvector sign patterns."""

from __future__ import annotations

import numpy as np

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.types.cluster import ClusterMap, SignSignatures
from hpcakit.types.spectral import EigenSystem
from hpcakit.utils.logger import Logger, resolve_logger
from hpcakit.validators.input_validators import validate_k

# Adjacent eigenvalues closer than this make the sign pattern basis-dependent.
DEGENERACY_TOL = 1e-10


def sign_signatures(es: EigenSystem, k: int, *, logger: Logger | None = None) -> SignSignatures:
    """Per-asset '+'/'-' string over eigenvectors 2..K+1; zero counts as '+'."""
    err = validate_k(k, es.dim, offset=1)
    if err:
        raise HpcaError.validation_error(
            err, code=ErrorCode.VALIDATION_OUT_OF_RANGE, module="clustering"
        )
    log = resolve_logger(logger)

    band = es.eigenvalues[: k + 2]
    close = np.flatnonzero(np.abs(np.diff(band)) <= DEGENERACY_TOL)
    if close.size:
        log.warn(
            "Eigenvalues %s are degenerate; sign clusters depend on the eigenbasis",
            ", ".join(f"{i + 1}/{i + 2}" for i in close),
        )

    block = es.eigenvectors[:, 1 : k + 1]
    symbols = np.where(block >= 0.0, "+", "-")
    signatures = tuple("".join(row) for row in symbols)
    return SignSignatures(tickers=es.tickers, signatures=signatures, k=k)


def sign_clusters(es: EigenSystem, k: int, *, logger: Logger | None = None) -> ClusterMap:
    """Group assets sharing a sign signature.

    Clusters are named ``Cluster 1``, ``Cluster 2``, ... in lexicographic
    order of the signatures that actually occur ('+' sorts before '-').
    """
    sig = sign_signatures(es, k, logger=logger)
    ordered = sorted(set(sig.signatures))
    names = {s: f"Cluster {i + 1}" for i, s in enumerate(ordered)}
    resolve_logger(logger).debug("K=%d produced %d sign clusters", k, len(ordered))
    return ClusterMap(
        tickers=es.tickers,
        labels=tuple(names[s] for s in sig.signatures),
        names=tuple(names[s] for s in ordered),
    )
