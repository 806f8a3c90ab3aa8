#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import datetime
import logging
import signal
import sys
import traceback

from src.config import LOG_FORMAT, load_settings
from src.harness import COALITION_GRAND, COALITION_SELECT, SHAPLEY_EXACT, SHAPLEY_MC, HarnessController, RunOptions
from src.impatience import SOLVER_EXHAUSTIVE, SOLVER_SMITH


def sigint_handler(signum, frame):
    """
    @brief Signal handler for SIGINT (Ctrl+C).
    @details
    This handler is invoked when the user presses Ctrl+C. It performs a graceful shutdown.
    """
    print("\nCtrl+C detected. Quitting...", file=sys.stderr)
    sys.exit(130)


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--split", choices=("shapley", "equal"), default="shapley",
                        help="Compensation split rule (default: shapley)")
    parser.add_argument("--shapley", choices=(SHAPLEY_EXACT, SHAPLEY_MC), default=SHAPLEY_EXACT,
                        help="Shapley method (default: exact)")
    parser.add_argument("--samples", type=int, default=None,
                        help="Monte Carlo permutations (default: Harness.mc_samples)")
    parser.add_argument("--seed", type=int, default=0, help="Monte Carlo seed (default: 0)")
    parser.add_argument("--solver", choices=(SOLVER_SMITH, SOLVER_EXHAUSTIVE), default=SOLVER_SMITH,
                        help="Service order solver (default: smith)")


def _run_options(args, coalition: str = COALITION_GRAND, baseline: bool = False) -> RunOptions:
    return RunOptions(
        split=args.split,
        shapley=args.shapley,
        samples=args.samples,
        seed=args.seed,
        coalition=coalition,
        baseline=baseline,
        solver=args.solver,
    )


def build_parser() -> argparse.ArgumentParser:
    """@brief Command-line parser with one subparser per harness command."""
    parser = argparse.ArgumentParser(
        prog="carpool",
        description="Impatience-aware carpool fare allocation harness",
    )
    parser.add_argument("--config", type=str, default=None,
                        help="Harness settings YAML (default: config/harness.yaml)")
    parser.add_argument("--log-level", type=str, default=None,
                        help="Log level override, e.g. DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Allocate one scenario and write the results table")
    run.add_argument("--scenario", required=True, help="Scenario YAML")
    run.add_argument("--out", default=None, help="Results CSV (default: stdout)")
    run.add_argument("--coalition", choices=(COALITION_GRAND, COALITION_SELECT), default=COALITION_GRAND,
                     help="Use all passengers or search the best coalition")
    run.add_argument("--baseline", action="store_true", help="Report the zero-compensation baseline")
    _add_run_options(run)

    sweep = commands.add_parser("sweep", help="Run a parameter grid around a scenario")
    sweep.add_argument("--scenario", required=True, help="Base scenario YAML")
    sweep.add_argument("--grid", required=True, help="Grid YAML")
    sweep.add_argument("--out", required=True, help="Sweep CSV")
    sweep.add_argument("--coalition", choices=(COALITION_GRAND, COALITION_SELECT), default=COALITION_GRAND)
    sweep.add_argument("--workers", type=int, default=1, help="Concurrent grid points (default: 1)")
    _add_run_options(sweep)

    generate = commands.add_parser("generate", help="Write a seeded random scenario")
    generate.add_argument("--seed", type=int, required=True)
    generate.add_argument("--n", type=int, required=True, help="Number of passengers")
    generate.add_argument("--out", default=None, help="Scenario YAML (default: stdout)")
    generate.add_argument("--label", default=None)

    validate = commands.add_parser("validate", help="Check a scenario file")
    validate.add_argument("--scenario", required=True)

    sequence = commands.add_parser("sequence", help="Print sigma* and the impatience breakdown")
    sequence.add_argument("--scenario", required=True)
    sequence.add_argument("--method", choices=(SOLVER_SMITH, SOLVER_EXHAUSTIVE), default=SOLVER_SMITH)

    shapley = commands.add_parser("shapley", help="Print Shapley values of the impatience game")
    shapley.add_argument("--scenario", required=True)
    _add_run_options(shapley)
    return parser


def main(argv=None) -> int:
    """
    @brief Parses arguments, runs one harness command and returns its exit code.
    """
    signal.signal(signal.SIGINT, sigint_handler)
    args = build_parser().parse_args(argv)

    controller = HarnessController()
    try:
        settings = load_settings(args.config)
        logging.basicConfig(
            level=(args.log_level or settings.log_level).upper(),
            format=LOG_FORMAT,
            stream=sys.stderr,
        )
        controller = HarnessController(settings)

        if args.command == "run":
            code = controller.Run(args.scenario, _run_options(args, args.coalition, args.baseline), args.out)
        elif args.command == "sweep":
            if args.workers < 1:
                raise ValueError(f"--workers must be >= 1, got {args.workers}")
            code = controller.Sweep(args.scenario, args.grid, args.out,
                                    _run_options(args, args.coalition), args.workers)
        elif args.command == "generate":
            code = controller.Generate(args.seed, args.n, args.out, args.label)
        elif args.command == "validate":
            code = controller.Validate(args.scenario)
        elif args.command == "sequence":
            code = controller.Sequence(args.scenario, args.method)
        else:
            code = controller.Shapley(args.scenario, _run_options(args))
    except Exception as e:
        # settings, log level and option errors happen before any command runs
        code = controller.HandleError(e)

    if code != HarnessController.HARNESS_OK:
        print(controller.ErrorLine(), file=sys.stderr)
    return code


if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception:
        # Generate a log filename with the current date and time.
        now = datetime.datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        log_filename = f"crash-log-{now}.log"
        with open(log_filename, "w") as log_file:
            traceback.print_exc(file=log_file)
        print(f"Unexpected error, traceback written to {log_filename}", file=sys.stderr)
        sys.exit(1)
