"""Tests for the CSV report writers."""

from __future__ import annotations

import numpy as np
import pandas as pd

from hpcakit.reports.writers import (
    cumulative_frame,
    echo_lines,
    spectrum_frame,
    write_frame,
    write_matrix,
)
from hpcakit.types.spectral import CorrelationMatrix, ExplainedVariance
from hpcakit.utils.version import get_version


class TestEchoLines:
    def test_version_first(self) -> None:
        lines = echo_lines({"seed": 3, "scheme": None, "vectors": [1, 2]})
        assert lines[0] == f'# hpcakit_version: "{get_version()}"'
        assert lines[1:] == ["# seed: 3", "# scheme: null", "# vectors: [1, 2]"]


class TestWriteFrame:
    def test_header_then_csv(self, tmp_path) -> None:
        path = write_frame(
            pd.DataFrame({"a": [1, 2]}), tmp_path / "nested" / "out.csv", {"k": 4}
        )
        text = path.read_text(encoding="utf-8")
        assert text.splitlines() == [
            f'# hpcakit_version: "{get_version()}"',
            "# k: 4",
            "a",
            "1",
            "2",
        ]

    def test_fifteen_significant_digits(self, tmp_path) -> None:
        path = write_frame(pd.DataFrame({"x": [1 / 3, 2.5]}), tmp_path / "f.csv", {})
        rows = path.read_text(encoding="utf-8").splitlines()
        assert rows[-2:] == ["0.333333333333333", "2.5"]

    def test_reads_back(self, tmp_path) -> None:
        frame = pd.DataFrame({"rank": [1, 2], "value": [0.125, -3.0]})
        path = write_frame(frame, tmp_path / "r.csv", {"command": "spectrum"})
        pd.testing.assert_frame_equal(pd.read_csv(path, comment="#"), frame)


class TestWriteMatrix:
    def test_ticker_labels(self, tmp_path) -> None:
        matrix = CorrelationMatrix(("A", "B"), np.array([[1.0, 0.5], [0.5, 1.0]]))
        path = write_matrix(matrix, tmp_path / "m.csv", {})
        rows = path.read_text(encoding="utf-8").splitlines()[1:]
        assert rows == ["ticker,A,B", "A,1,0.5", "B,0.5,1"]


class TestSpectrumFrames:
    def test_spectrum_frame(self) -> None:
        eigenvalues = np.array([2.0, 1.0, 1.0])
        explained = ExplainedVariance(eigenvalues / 4, np.cumsum(eigenvalues / 4))
        frame = spectrum_frame(eigenvalues, explained)
        assert frame["rank"].tolist() == [1, 2, 3]
        assert frame["cumulative"].tolist() == [0.5, 0.75, 1.0]

    def test_cumulative_frame(self) -> None:
        pca = ExplainedVariance(np.array([0.5, 0.5]), np.array([0.5, 1.0]))
        hpca = ExplainedVariance(np.array([0.7, 0.3]), np.array([0.7, 1.0]))
        frame = cumulative_frame({"pca": pca, "hpca": hpca})
        assert list(frame.columns) == ["rank", "pca", "hpca"]
        assert frame["hpca"].tolist() == [0.7, 1.0]
