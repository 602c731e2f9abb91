from dataclasses import replace

from hpcakit.types.config import RunConfig
from hpcakit.validators.input_validators import (
    validate_intensity,
    validate_k,
    validate_label,
    validate_run_config,
    validate_step,
    validate_threshold,
    validate_window,
)


class TestValidateWindow:
    def test_valid(self):
        assert validate_window(125, 500) is None

    def test_full_history(self):
        assert validate_window(500, 500) is None

    def test_too_short(self):
        assert validate_window(1, 500) is not None

    def test_longer_than_history(self):
        assert "exceeds" in validate_window(600, 500)


class TestValidateStep:
    def test_valid(self):
        assert validate_step(1) is None

    def test_zero(self):
        assert validate_step(0) is not None


class TestValidateK:
    def test_valid(self):
        assert validate_k(4, 10) is None

    def test_upper_bound(self):
        assert validate_k(9, 10) is None
        assert validate_k(10, 10) is not None

    def test_offset(self):
        assert validate_k(10, 10, offset=0) is None

    def test_non_positive(self):
        assert validate_k(0) is not None

    def test_without_universe(self):
        assert validate_k(50) is None


class TestValidateThreshold:
    def test_valid(self):
        assert validate_threshold(0.5) is None
        assert validate_threshold(1.0) is None

    def test_out_of_range(self):
        assert validate_threshold(0.0) is not None
        assert validate_threshold(1.5) is not None


class TestValidateIntensity:
    def test_auto(self):
        assert validate_intensity("auto") is None

    def test_numbers(self):
        assert validate_intensity(0.0) is None
        assert validate_intensity(1.0) is None
        assert validate_intensity(1.01) is not None

    def test_unknown_keyword(self):
        assert validate_intensity("max") is not None


class TestValidateLabel:
    def test_valid(self):
        assert validate_label("Energy") is None

    def test_empty(self):
        assert validate_label("  ") is not None

    def test_missing(self):
        assert validate_label(None) is not None


class TestValidateRunConfig:
    def test_synth_needs_no_prices(self):
        assert validate_run_config(RunConfig(command="synth")) == []

    def test_valid_run(self, write_csv):
        prices = write_csv("prices.csv", "date,A\n2020-01-01,1\n")
        assert validate_run_config(RunConfig(command="cluster", prices=str(prices))) == []

    def test_missing_prices(self):
        errors = validate_run_config(RunConfig(command="spectrum"))
        assert errors == ["--prices is required"]

    def test_prices_not_found(self, tmp_path):
        errors = validate_run_config(
            RunConfig(command="spectrum", prices=str(tmp_path / "none.csv"))
        )
        assert any("not found" in e for e in errors)

    def test_collects_every_problem(self, write_csv):
        prices = str(write_csv("prices.csv", "date,A\n2020-01-01,1\n"))
        config = RunConfig(
            command="hpca",
            prices=prices,
            k=0,
            window=1,
            rebalance=0,
            cost_bps=-1.0,
            threshold=2.0,
        )
        errors = validate_run_config(config)
        assert len(errors) == 6
        assert "--scheme is required for the hpca command" in errors

    def test_label_scheme_needs_meta(self, write_csv):
        prices = str(write_csv("prices.csv", "date,A\n2020-01-01,1\n"))
        config = RunConfig(command="spectrum", prices=prices, scheme="country")
        assert validate_run_config(config) == ["--meta is required with scheme=country"]
        assert validate_run_config(replace(config, scheme="stat")) == []

    def test_strategies(self, write_csv):
        prices = str(write_csv("prices.csv", "date,A\n2020-01-01,1\n"))
        config = RunConfig(
            command="backtest", prices=prices, strategies=("hpca_gics", "bogus")
        )
        errors = validate_run_config(config)
        assert "Unknown strategies: bogus" in errors
        assert "--meta is required for the hpca_gics strategy" in errors

    def test_synth_sizes(self):
        config = RunConfig(command="synth", clusters=0, periods=1, countries=0)
        assert len(validate_run_config(config)) == 3

    def test_unknown_command(self):
        assert validate_run_config(RunConfig(command="plot", prices=None))[0].startswith(
            "Unknown command"
        )
