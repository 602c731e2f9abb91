"""Run configuration assembly: defaults, then a JSON file, then flags."""

from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any

from hpcakit.errors.error_codes import ErrorCode
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.types.config import RunConfig

# Parser destinations that are not RunConfig fields.
NON_CONFIG_ARGS = {"config"}


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Read a JSON object of RunConfig fields."""
    try:
        with Path(path).open(encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise HpcaError.input_error(
            f"Cannot read config file: {exc}", path=str(path), module="cli"
        ) from exc
    except json.JSONDecodeError as exc:
        raise HpcaError.validation_error(
            f"Config file is not valid JSON: {exc}", module="cli"
        ) from exc
    if not isinstance(data, dict):
        raise HpcaError.validation_error("Config file must hold a JSON object", module="cli")
    return data


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, the optional ``--config`` file and explicit flags, in that order."""
    config = RunConfig()
    try:
        if getattr(args, "config", None):
            config = config.merged(load_config_file(args.config))
        flags = {k: v for k, v in vars(args).items() if k not in NON_CONFIG_ARGS}
        return config.merged(flags)
    except KeyError as exc:
        raise HpcaError.validation_error(
            str(exc.args[0]), code=ErrorCode.VALIDATION_ERROR, module="cli"
        ) from exc
    except (TypeError, ValueError) as exc:
        raise HpcaError.validation_error(f"Invalid config value: {exc}", module="cli") from exc
