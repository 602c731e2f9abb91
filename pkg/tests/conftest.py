"""Shared test fixtures for hpcakit."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from hpcakit.returns.transforms import compute_returns, standardize
from hpcakit.synthetic import hierarchical_panel
from hpcakit.types.panel import StandardizedPanel, SyntheticUniverse
from hpcakit.utils.logger import RecordingLogger


@pytest.fixture
def recording_logger() -> RecordingLogger:
    """A logger that keeps messages for assertions."""
    return RecordingLogger()


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator so every test draw is reproducible."""
    return np.random.default_rng(12345)


@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write text to a file under the test's temporary directory."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def universe() -> SyntheticUniverse:
    """Three sectors of six assets each over 600 periods."""
    return hierarchical_panel(clusters=3, per_cluster=6, periods=600, seed=7)


@pytest.fixture
def panel(universe: SyntheticUniverse) -> StandardizedPanel:
    """Standardized log returns of ``universe``."""
    return standardize(compute_returns(universe.prices))
