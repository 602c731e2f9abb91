"""Configuration types for hpcakit."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace
from typing import Any


def _coerce(current: Any, value: Any) -> Any:
    """Cast ``value`` to the scalar type of the field's current value."""
    if isinstance(current, bool):
        if not isinstance(value, bool):
            raise TypeError(f"expected a boolean, got {value!r}")
        return value
    if isinstance(current, (int, float)):
        return type(current)(value)
    return value


def _integer(value: Any) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"expected an integer, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class OptimizerConfig:
    """Configuration for the max-Sharpe optimizer.

    Attributes:
        long_only: Clip negative weights to zero and renormalize.
        ridge: Ridge added to the covariance diagonal before solving.
    """
    long_only: bool = False
    ridge: float = 1e-6


@dataclass(frozen=True)
class BacktestConfig:
    """Configuration for a rolling-window backtest.

    Attributes:
        window: Estimation window width in return periods.
        rebalance: Trading days between rebalances.
        cost_bps: Proportional cost charged on turnover, in basis points.
        stat_k: Eigenvectors used for statistical clustering.
        kind: Return definition used for estimation ("log" or "simple").
        optimizer: Max-Sharpe settings for the optimized strategies.
    """
    window: int = 125
    rebalance: int = 21
    cost_bps: float = 5.0
    stat_k: int = 4
    kind: str = "log"
    optimizer: OptimizerConfig = OptimizerConfig()

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class RunConfig:
    """Configuration for one CLI run.

    Precedence is dataclass defaults, then the JSON file given with
    ``--config``, then explicit command-line flags.
    """
    command: str = ""
    prices: str | None = None
    meta: str | None = None
    scheme: str | None = None
    k: int = 4
    window: int = 125
    rebalance: int = 21
    cost_bps: float = 5.0
    out: str = "out"
    seed: int = 0
    verify: bool = False
    kind: str = "log"
    min_history: int = 2
    threshold: float = 0.5
    top: int = 15
    vectors: tuple[int, ...] = (1, 2, 3)
    strategies: tuple[str, ...] | None = None
    long_only: bool = False
    ridge: float = 1e-6
    verify_samples: int = 200_000
    clusters: int = 3
    per_cluster: int = 10
    periods: int = 1000
    global_strength: float = 0.6
    cluster_strength: float = 0.5
    noise: float = 0.6
    countries: int = 2
    country_strength: float = 0.0
    verbose: bool = False

    @classmethod
    def field_names(cls) -> set[str]:
        return {f.name for f in fields(cls)}

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> RunConfig:
        """Build a config from a plain mapping (e.g. parsed JSON).

        Unknown keys raise ``KeyError``; dashes in keys are read as underscores.
        """
        return cls().merged(data)

    def merged(self, overrides: dict[str, Any]) -> RunConfig:
        """Return a copy with every non-None entry of ``overrides`` applied."""
        known = self.field_names()
        changes: dict[str, Any] = {}
        for raw_key, value in overrides.items():
            key = raw_key.replace("-", "_")
            if key not in known:
                raise KeyError(f"Unknown configuration key: {raw_key}")
            if value is None:
                continue
            if key == "vectors":
                value = tuple(_integer(v) for v in value)
            elif key == "strategies":
                value = tuple(str(v) for v in value)
            else:
                value = _coerce(getattr(self, key), value)
            changes[key] = value
        return replace(self, **changes)

    def backtest_config(self) -> BacktestConfig:
        return BacktestConfig(
            window=self.window,
            rebalance=self.rebalance,
            cost_bps=self.cost_bps,
            stat_k=self.k,
            kind=self.kind,
            optimizer=OptimizerConfig(long_only=self.long_only, ridge=self.ridge),
        )

    def to_echo(self) -> dict[str, Any]:
        """Deterministic view of the run, embedded in every output file."""
        echo = asdict(self)
        echo.pop("verbose")
        echo["vectors"] = list(self.vectors)
        echo["strategies"] = None if self.strategies is None else list(self.strategies)
        return dict(sorted(echo.items()))
