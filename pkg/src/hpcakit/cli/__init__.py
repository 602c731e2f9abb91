"""Command-line interface."""

from hpcakit.cli.commands import (
    cmd_backtest,
    cmd_cluster,
    cmd_hpca,
    cmd_spectrum,
    cmd_synth,
    run_command,
)
from hpcakit.cli.config import build_run_config, load_config_file
from hpcakit.cli.main import build_parser, main

__all__ = [
    "build_parser",
    "build_run_config",
    "cmd_backtest",
    "cmd_cluster",
    "cmd_hpca",
    "cmd_spectrum",
    "cmd_synth",
    "load_config_file",
    "main",
    "run_command",
]
