"""CSV writers that prefix every file with the run's configuration echo."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from hpcakit.types.spectral import CorrelationMatrix, ExplainedVariance
from hpcakit.utils.version import get_version

FLOAT_FORMAT = "%.15g"


def echo_lines(echo: Mapping[str, Any]) -> list[str]:
    """``# key: value`` lines, version first, values JSON-encoded."""
    lines = [f"# hpcakit_version: {json.dumps(get_version())}"]
    lines.extend(f"# {key}: {json.dumps(value, sort_keys=True)}" for key, value in echo.items())
    return lines


def write_frame(
    frame: pd.DataFrame,
    path: str | Path,
    echo: Mapping[str, Any],
    *,
    index: bool = False,
    index_label: str | None = None,
) -> Path:
    """Write ``frame`` as CSV after the echo header; floats keep 15 significant digits."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="") as fh:
        for line in echo_lines(echo):
            fh.write(line + "\n")
        frame.to_csv(
            fh,
            index=index,
            index_label=index_label,
            float_format=FLOAT_FORMAT,
            lineterminator="\n",
        )
    return target


def write_matrix(matrix: CorrelationMatrix, path: str | Path, echo: Mapping[str, Any]) -> Path:
    """Square matrix with a ticker header row and a ticker first column."""
    return write_frame(matrix.to_frame(), path, echo, index=True, index_label="ticker")


def spectrum_frame(eigenvalues: np.ndarray, explained: ExplainedVariance) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "rank": np.arange(1, eigenvalues.shape[0] + 1),
            "eigenvalue": eigenvalues,
            "fraction": explained.fractions,
            "cumulative": explained.cumulative,
        }
    )


def cumulative_frame(curves: Mapping[str, ExplainedVariance]) -> pd.DataFrame:
    """Side-by-side cumulative explained-variance curves, one column per model."""
    first = next(iter(curves.values()))
    frame = pd.DataFrame({"rank": np.arange(1, first.cumulative.shape[0] + 1)})
    for name, curve in curves.items():
        frame[name] = curve.cumulative
    return frame
