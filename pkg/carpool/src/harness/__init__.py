# carpool/src/harness/__init__.py

from .output import HarnessError, OutputPathError, open_output
from .scenario import (
    DEFAULT_MAX_PASSENGERS,
    Scenario,
    ScenarioSchemaError,
    dump_scenario,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .scenario_generator import (
    GeneratorRangeError,
    GeneratorRanges,
    default_params,
    generate_scenario,
)
from .report import (
    RESULT_COLUMNS,
    BudgetImbalanceError,
    CoalitionRow,
    DriverRow,
    PassengerRow,
    Report,
    check_budget_balance,
    read_report_table,
    report_to_frame,
    write_report,
)
from .experiment_runner import (
    COALITION_GRAND,
    COALITION_SELECT,
    SHAPLEY_EXACT,
    SHAPLEY_MC,
    RunOptions,
    run,
    shapley_solver,
)
from .sweep import SWEEP_COLUMNS, expand_grid, load_grid, point_scenario, sweep
from .harness_controller import HarnessController

__all__ = [
    "HarnessError",
    "OutputPathError",
    "open_output",
    "DEFAULT_MAX_PASSENGERS",
    "Scenario",
    "ScenarioSchemaError",
    "dump_scenario",
    "load_scenario",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "GeneratorRangeError",
    "GeneratorRanges",
    "default_params",
    "generate_scenario",
    "RESULT_COLUMNS",
    "BudgetImbalanceError",
    "CoalitionRow",
    "DriverRow",
    "PassengerRow",
    "Report",
    "check_budget_balance",
    "read_report_table",
    "report_to_frame",
    "write_report",
    "COALITION_GRAND",
    "COALITION_SELECT",
    "SHAPLEY_EXACT",
    "SHAPLEY_MC",
    "RunOptions",
    "run",
    "shapley_solver",
    "SWEEP_COLUMNS",
    "expand_grid",
    "load_grid",
    "point_scenario",
    "sweep",
    "HarnessController",
]
