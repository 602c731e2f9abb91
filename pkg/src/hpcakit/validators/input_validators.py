"""Input validation utilities for hpcakit."""

from __future__ import annotations

import os

from hpcakit.types.cluster import ClusterScheme
from hpcakit.types.config import RunConfig
from hpcakit.types.panel import ReturnKind
from hpcakit.types.portfolio import Strategy

COMMANDS = {"spectrum", "cluster", "hpca", "backtest", "synth"}
MAX_STAT_K = 20


def validate_window(width: int, periods: int) -> str | None:
    if width < 2:
        return "Window width must be at least 2"
    if width > periods:
        return f"Window width {width} exceeds the {periods} available periods"
    return None


def validate_step(step: int) -> str | None:
    if step < 1:
        return "Window step must be at least 1"
    return None


def validate_k(k: int, n_assets: int | None = None, *, offset: int = 1) -> str | None:
    """Check a factor/eigenvector count against the universe size.

    ``offset`` is how many leading eigenvectors the caller skips or keeps
    aside; K + offset must not exceed N.
    """
    if k < 1:
        return "K must be at least 1"
    if n_assets is not None and k + offset > n_assets:
        return f"K={k} is too large for {n_assets} assets (need K + {offset} <= N)"
    return None


def validate_threshold(threshold: float) -> str | None:
    if not 0.0 < threshold <= 1.0:
        return "Localization threshold must lie in (0, 1]"
    return None


def validate_intensity(intensity: float | str) -> str | None:
    if isinstance(intensity, str):
        if intensity != "auto":
            return "Shrinkage intensity must be a number in [0, 1] or 'auto'"
        return None
    if not 0.0 <= intensity <= 1.0:
        return "Shrinkage intensity must lie in [0, 1]"
    return None


def validate_label(label: str | None) -> str | None:
    if label is None or not isinstance(label, str):
        return "Label is required"
    if not label.strip():
        return "Label cannot be empty"
    return None


def validate_run_config(config: RunConfig) -> list[str]:
    errors: list[str] = []
    if config.command not in COMMANDS:
        errors.append(f"Unknown command: {config.command!r}")
    if config.command != "synth":
        if not config.prices:
            errors.append("--prices is required")
        elif not os.path.isfile(config.prices):
            errors.append(f"Prices file not found: {config.prices}")
    if config.meta and not os.path.isfile(config.meta):
        errors.append(f"Metadata file not found: {config.meta}")
    if config.scheme is not None and config.scheme not in {s.value for s in ClusterScheme}:
        errors.append("Scheme must be one of: sector, country, stat")
    label_schemes = (ClusterScheme.SECTOR.value, ClusterScheme.COUNTRY.value)
    if config.scheme in label_schemes and not config.meta:
        errors.append(f"--meta is required with scheme={config.scheme}")
    if config.command == "hpca" and config.scheme is None:
        errors.append("--scheme is required for the hpca command")
    if config.k < 1:
        errors.append("K must be at least 1")
    elif config.k > MAX_STAT_K:
        errors.append(f"K must not exceed {MAX_STAT_K}")
    if config.window < 2:
        errors.append("Window must be at least 2")
    step_err = validate_step(config.rebalance)
    if step_err:
        errors.append(step_err)
    if config.cost_bps < 0:
        errors.append("Cost must be non-negative")
    if config.ridge < 0:
        errors.append("Ridge must be non-negative")
    if config.kind not in {k.value for k in ReturnKind}:
        errors.append("Return kind must be 'log' or 'simple'")
    threshold_err = validate_threshold(config.threshold)
    if threshold_err:
        errors.append(threshold_err)
    if any(v < 1 for v in config.vectors):
        errors.append("Eigenvector orders must be at least 1")
    if config.strategies is not None:
        valid = {s.value for s in Strategy}
        bad = [s for s in config.strategies if s not in valid]
        if bad:
            errors.append(f"Unknown strategies: {', '.join(bad)}")
        if Strategy.HPCA_GICS.value in config.strategies and not config.meta:
            errors.append("--meta is required for the hpca_gics strategy")
    if config.min_history < 2:
        errors.append("min_history must be at least 2")
    if config.verify_samples < 2:
        errors.append("verify_samples must be at least 2")
    if config.command == "synth":
        if config.clusters < 1 or config.per_cluster < 1:
            errors.append("Synthetic universe needs at least one cluster of one asset")
        if config.periods < 2:
            errors.append("Synthetic panel needs at least 2 periods")
        if config.countries < 1:
            errors.append("Synthetic universe needs at least one country")
    return errors
