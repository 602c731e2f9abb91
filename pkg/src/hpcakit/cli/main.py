"""``hpcakit`` command-line entry point."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import NoReturn

from hpcakit.cli.commands import run_command
from hpcakit.cli.config import build_run_config
from hpcakit.errors.hpca_error import HpcaError
from hpcakit.types.cluster import ClusterScheme
from hpcakit.types.panel import ReturnKind
from hpcakit.utils.logger import create_logger
from hpcakit.utils.version import get_version
from hpcakit.validators.input_validators import validate_run_config

EXIT_OK = 0
EXIT_INVALID = 1


class _Parser(argparse.ArgumentParser):
    """Usage errors are validation errors: exit 1, not argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text}") from exc


def _str_list(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _common_parser() -> argparse.ArgumentParser:
    # Every default is None so that only flags given on the command line
    # override the JSON config file.
    common = _Parser(add_help=False)
    io = common.add_argument_group("inputs and outputs")
    io.add_argument("--prices", help="Prices CSV: date,<ticker>,...")
    io.add_argument("--meta", help="Metadata CSV: ticker,sector,country")
    io.add_argument("--out", help="Output directory (default: out)")
    io.add_argument("--config", help="JSON file of run settings; flags take precedence")
    io.add_argument("--min-history", type=int, help="Drop tickers with fewer observations")
    io.add_argument("--kind", choices=[k.value for k in ReturnKind], help="Return definition")

    model = common.add_argument_group("model")
    model.add_argument("--scheme", choices=[s.value for s in ClusterScheme])
    model.add_argument("--k", type=int, help="Eigenvectors used for sign clustering")
    model.add_argument("--threshold", type=float, help="Localization share threshold")
    model.add_argument("--top", type=int, help="Eigenvectors in the localization report")
    model.add_argument("--vectors", type=_int_list, help="Eigenvector orders to export, e.g. 1,2,3")
    model.add_argument("--verify", action="store_const", const=True, default=None,
                       help="Run the Gaussian Monte-Carlo check on the model matrix")
    model.add_argument("--verify-samples", type=int)

    bt = common.add_argument_group("backtest")
    bt.add_argument("--window", type=int, help="Estimation window in periods")
    bt.add_argument("--rebalance", type=int, help="Periods between rebalances")
    bt.add_argument("--cost-bps", type=float, help="Proportional cost in basis points")
    bt.add_argument("--strategies", type=_str_list, help="Comma-separated strategy ids")
    bt.add_argument("--long-only", action="store_const", const=True, default=None)
    bt.add_argument("--ridge", type=float, help="Ridge added to the covariance diagonal")

    synth = common.add_argument_group("synthetic data")
    synth.add_argument("--clusters", type=int)
    synth.add_argument("--per-cluster", type=int)
    synth.add_argument("--periods", type=int)
    synth.add_argument("--global-strength", type=float)
    synth.add_argument("--cluster-strength", type=float)
    synth.add_argument("--noise", type=float)
    synth.add_argument("--countries", type=int)
    synth.add_argument("--country-strength", type=float)

    common.add_argument("--seed", type=int, help="Seed for every random draw")
    common.add_argument("--verbose", action="store_const", const=True, default=None)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hpcakit",
        description="Hierarchical PCA correlation models, sign clustering and backtests.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")
    common = _common_parser()
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("spectrum", parents=[common], help="PCA/HPCA spectra and rolling diversity")
    sub.add_parser("cluster", parents=[common], help="Statistical clusters from eigenvector signs")
    sub.add_parser("hpca", parents=[common], help="HPCA model matrix and localization report")
    sub.add_parser("backtest", parents=[common], help="Rolling max-Sharpe strategy backtests")
    sub.add_parser("synth", parents=[common], help="Generate a synthetic hierarchical universe")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns 0, 1 for invalid input or 2 for numerical failure."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INVALID

    try:
        config = build_run_config(args)
        errors = validate_run_config(config)
        if errors:
            raise HpcaError.validation_error("; ".join(errors), module="cli")
        logger = create_logger(debug=config.verbose)
        for path in run_command(config, logger):
            logger.debug("Wrote %s", path)
    except HpcaError as exc:
        print(f"hpcakit {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
