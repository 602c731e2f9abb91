"""Plot-ready CSV outputs."""

from hpcakit.reports.writers import (
    FLOAT_FORMAT,
    cumulative_frame,
    echo_lines,
    spectrum_frame,
    write_frame,
    write_matrix,
)

__all__ = [
    "FLOAT_FORMAT",
    "cumulative_frame",
    "echo_lines",
    "spectrum_frame",
    "write_frame",
    "write_matrix",
]
