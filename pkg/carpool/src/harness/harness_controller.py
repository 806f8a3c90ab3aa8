# -*- coding: utf-8 -*-
"""
@file harness_controller.py
@brief Provides the HarnessController class behind the command-line interface.
@details
Each public method implements one subcommand and returns an error code
(HARNESS_OK on success) so the caller can turn it into a process exit code.
On failure the controller keeps the exception, and ErrorLine() renders it as
one machine-parsable line:

    ERROR code=<n> kind=<ExceptionClass> message="<json string>"
"""

import json
import logging
import sys

from src.allocation import AllocationError
from src.coalition import (
    GameError,
    GameTooLargeError,
    ImpatienceGame,
    verify_axioms,
)
from src.config import (
    ConfigFileFormatError,
    ConfigFileNotFoundError,
    ConfigLoaderException,
    HarnessSettings,
)
from src.impatience import (
    CoalitionTooLargeError,
    SequenceError,
    optimal_sequence,
    total_impatience,
)
from src.model import InvariantViolationError, ModelError
from src.harness.experiment_runner import RunOptions, run, shapley_solver
from src.harness.output import HarnessError, OutputPathError
from src.harness.report import report_to_frame, write_frame, write_report
from src.harness.scenario import ScenarioSchemaError, dump_scenario, load_scenario, save_scenario
from src.harness.scenario_generator import GeneratorRanges, default_params, generate_scenario
from src.harness.sweep import load_grid, sweep

logger = logging.getLogger(__name__)


class HarnessController:
    """
    @brief Runs harness subcommands and maps failures to error codes.
    """

    # Error code constants.
    HARNESS_OK = 0
    ERROR_UNEXPECTED = 1
    ERROR_SCENARIO_NOT_FOUND = 2
    ERROR_SCENARIO_PARSE = 3
    ERROR_SCENARIO_SCHEMA = 4
    ERROR_INVARIANT = 5
    ERROR_ALLOCATION = 6
    ERROR_SIZE = 7
    ERROR_OUTPUT = 8
    ERROR_INVALID_ARGUMENT = 9

    # Most specific first.
    _ERROR_CODES = (
        (ConfigFileNotFoundError, ERROR_SCENARIO_NOT_FOUND),
        (ConfigFileFormatError, ERROR_SCENARIO_PARSE),
        (ConfigLoaderException, ERROR_SCENARIO_PARSE),
        (ScenarioSchemaError, ERROR_SCENARIO_SCHEMA),
        (InvariantViolationError, ERROR_INVARIANT),
        (ModelError, ERROR_INVARIANT),
        (GameTooLargeError, ERROR_SIZE),
        (CoalitionTooLargeError, ERROR_SIZE),
        (AllocationError, ERROR_ALLOCATION),
        (OutputPathError, ERROR_OUTPUT),
        (GameError, ERROR_INVALID_ARGUMENT),
        (SequenceError, ERROR_INVALID_ARGUMENT),
        (HarnessError, ERROR_INVALID_ARGUMENT),
        (ValueError, ERROR_INVALID_ARGUMENT),
    )

    def __init__(self, settings: HarnessSettings = None, stdout=None):
        """
        @brief Initializes a HarnessController.
        @param settings Resolved harness settings; defaults when None.
        @param stdout Stream for command output; sys.stdout when None.
        """
        self._settings = settings or HarnessSettings()
        self._stdout = stdout or sys.stdout
        self._last_error = None
        self._last_code = self.HARNESS_OK

    def HandleError(self, error: Exception) -> int:
        """
        @brief Records error and returns its code.
        @details Errors outside the mapping get ERROR_UNEXPECTED and their traceback is logged.
        """
        self._last_error = error
        for kind, code in self._ERROR_CODES:
            if isinstance(error, kind):
                self._last_code = code
                break
        else:
            self._last_code = self.ERROR_UNEXPECTED
            logger.error("Unexpected %s: %s", type(error).__name__, error, exc_info=error)
            return self._last_code
        logger.error("%s: %s", type(error).__name__, error)
        return self._last_code

    def _succeed(self) -> int:
        self._last_error = None
        self._last_code = self.HARNESS_OK
        return self.HARNESS_OK

    def _load(self, scenario_path: str):
        return load_scenario(scenario_path, self._settings.max_passengers)

    def Run(self, scenario_path: str, options: RunOptions, out_path: str = None) -> int:
        """
        @brief Runs one scenario and writes its results table.
        @param out_path CSV destination; stdout when None.
        @return HARNESS_OK on success, or an error code.
        """
        try:
            report = run(self._load(scenario_path), options, self._settings)
            if out_path:
                write_report(report, out_path)
            else:
                write_frame(report_to_frame(report), self._stdout)
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def Sweep(self, scenario_path: str, grid_path: str, out_path: str,
              options: RunOptions, workers: int = 1) -> int:
        """
        @brief Runs a grid sweep around a base scenario.
        @return HARNESS_OK on success, or an error code.
        """
        try:
            base = self._load(scenario_path)
            table = sweep(load_grid(grid_path), base, out_path, options, self._settings, workers)
            failed = int((table["status"] != "ok").sum())
            print(f"sweep: {len(table)} points, {failed} failed -> {out_path}", file=self._stdout)
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def Generate(self, seed: int, n_passengers: int, out_path: str = None, label: str = None) -> int:
        """
        @brief Generates a seeded scenario and saves it as YAML.
        @param out_path YAML destination; stdout when None.
        @return HARNESS_OK on success, or an error code.
        """
        try:
            scenario = generate_scenario(
                seed,
                n_passengers,
                GeneratorRanges.from_settings(self._settings),
                default_params(self._settings),
                label,
                self._settings.max_passengers,
            )
            if out_path:
                save_scenario(scenario, out_path)
            else:
                self._stdout.write(dump_scenario(scenario))
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def Validate(self, scenario_path: str) -> int:
        """
        @brief Loads and validates a scenario file.
        @return HARNESS_OK if the file is a valid scenario, or an error code.
        """
        try:
            scenario = self._load(scenario_path)
            print(f"OK {scenario.label}: {len(scenario.passengers)} passengers", file=self._stdout)
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def Sequence(self, scenario_path: str, method: str) -> int:
        """
        @brief Prints sigma* and the impatience breakdown of the grand coalition.
        @return HARNESS_OK on success, or an error code.
        """
        try:
            scenario = self._load(scenario_path)
            sequence, value = optimal_sequence(
                scenario.passengers, method, self._settings.exhaustive_bound
            )
            breakdown = total_impatience(scenario.passengers, sequence)
            print(f"sequence: {sequence}", file=self._stdout)
            for passenger_id, impatience in breakdown.per_passenger.items():
                print(f"{passenger_id}: {impatience!r}", file=self._stdout)
            print(f"total: {value!r}", file=self._stdout)
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def Shapley(self, scenario_path: str, options: RunOptions) -> int:
        """
        @brief Prints Shapley values of the grand coalition's impatience game.
        @return HARNESS_OK on success, or an error code.
        """
        try:
            scenario = self._load(scenario_path)
            game = ImpatienceGame(
                scenario.passengers, options.solver, self._settings.exhaustive_bound
            )
            result = shapley_solver(options, self._settings)(game)
            report = verify_axioms(game, result, max_players=self._settings.shapley_exact_max)
            print(f"method: {result.method} samples: {result.samples} seed: {result.seed}",
                  file=self._stdout)
            for passenger_id in result.players:
                print(f"{passenger_id}: {result.phi[passenger_id]!r} "
                      f"(se {result.std_error.get(passenger_id, 0.0)!r})", file=self._stdout)
            for check in report.checks:
                state = "skipped" if check.skipped else ("pass" if check.passed else "fail")
                print(f"{check.axiom}: {state} ({check.detail})", file=self._stdout)
        except Exception as e:
            return self.HandleError(e)
        return self._succeed()

    def GetLastError(self):
        """@brief The exception behind the last failed command, or None."""
        return self._last_error

    def ErrorLine(self) -> str:
        """@brief Machine-parsable description of the last failure ("" after success)."""
        if self._last_error is None:
            return ""
        return (
            f"ERROR code={self._last_code} kind={type(self._last_error).__name__} "
            f"message={json.dumps(str(self._last_error))}"
        )
