"""cplab command line: python -m src.app <subcommand> [--config PATH] [flags]."""

import argparse
import logging
import sys
from typing import List, Optional

from src.commands import COMMANDS
from src.commands.helpers import EXIT_CONFIG, EXIT_NUMERICAL, emit
from src.config.config import CPLAB_CONFIG, CPLAB_LOG_LEVEL
from src.config.config_loader import Overrides, RunConfig
from src.utils.error_utils import ConfigError, CplabError, log_error

logger = logging.getLogger(__name__)


def _setup_logging(verbose: bool):
    level = logging.DEBUG if verbose else getattr(logging, CPLAB_LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=level,
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cplab",
        description="Markovian dissipative generators for a spin in a gaussian field: "
                    "positivity, entangled evolution, CHSH correlators, tomography and a Monte Carlo oracle.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="subcommand to run")
    parser.add_argument("--config", default=CPLAB_CONFIG, help=f"run configuration (default {CPLAB_CONFIG})")
    parser.add_argument("--out", help="output path ('-' for stdout)")
    parser.add_argument("--format", choices=("csv", "json"), help="output format")
    parser.add_argument("--seed", type=int, help="master seed for the oracle and shot sampling")
    parser.add_argument("--horizon", type=float, help="time horizon")
    parser.add_argument("--steps", type=int, help="number of time grid points")
    parser.add_argument("--no-lamb-shift", action="store_true", help="drop the frequency shift from C_A")
    parser.add_argument("--dump-trajectories", metavar="PATH", help="write sample oracle trajectories as CSV")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)

    overrides = Overrides(
        out=args.out,
        format=args.format,
        seed=args.seed,
        horizon=args.horizon,
        steps=args.steps,
        no_lamb_shift=args.no_lamb_shift,
        dump_trajectories=args.dump_trajectories,
    )
    try:
        config = RunConfig(args.config).load(overrides)
    except ConfigError as e:
        log_error(f"Invalid configuration: {e}", config=args.config)
        return EXIT_CONFIG

    logger.info(f"Running '{args.command}' with {args.config}")
    try:
        result = COMMANDS[args.command](config)
        emit(result, config)
    except ConfigError as e:
        log_error(f"Invalid configuration: {e}", config=args.config)
        return EXIT_CONFIG
    except CplabError as e:
        log_error(str(e), command=args.command, config=args.config)
        return EXIT_NUMERICAL
    except OSError as e:
        log_error(f"Could not write output: {e}", exc_info=True, command=args.command)
        return EXIT_CONFIG
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
