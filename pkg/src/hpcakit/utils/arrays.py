"""Small array helpers shared by the domain types."""

from __future__ import annotations

import numpy as np


def frozen_array(array: np.ndarray) -> np.ndarray:
    """Return a float copy of ``array`` that cannot be written to."""
    out = np.array(array, dtype=float, copy=True)
    out.setflags(write=False)
    return out
