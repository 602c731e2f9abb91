"""Package-level export regression tests."""

from __future__ import annotations

import importlib

from hpcakit.types import BacktestConfig, RunConfig, Strategy


def test_import_hpcakit_package_exports_public_symbols() -> None:
    package = importlib.import_module("hpcakit")

    for name in package.__all__:
        assert getattr(package, name) is not None, name
    assert package.BacktestConfig is BacktestConfig
    assert package.RunConfig is RunConfig
    assert package.Strategy is Strategy


def test_version_matches_constant() -> None:
    package = importlib.import_module("hpcakit")

    assert package.get_version() == package.PACKAGE_VERSION


def test_console_script_entry_point_imports() -> None:
    module = importlib.import_module("hpcakit.cli")

    assert callable(module.main)
    assert callable(module.build_parser)
