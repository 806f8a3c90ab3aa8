# -*- coding: utf-8 -*-
"""
@file report.py
@brief Report rows and the flat results table.
@details
A Report holds one row per passenger of the chosen coalition, one driver row
and one coalition row. report_to_frame flattens them into RESULT_COLUMNS with
a leading `entity` column; cells that do not apply to an entity are empty.
Floats are written with their shortest round-trip representation.
"""

import logging
from dataclasses import dataclass

import pandas as pd

from src.harness.output import HarnessError, open_output

logger = logging.getLogger(__name__)

BUDGET_TOLERANCE = 1e-9

ENTITY_PASSENGER = "passenger"
ENTITY_DRIVER = "driver"
ENTITY_COALITION = "coalition"

PASSENGER_COLUMNS = (
    "passenger_id", "F", "G", "phi", "x_i", "net_payment", "impatience",
    "payment_reduction_pct", "solo_payment", "surplus",
)
DRIVER_COLUMNS = ("x_d", "baseline_revenue", "revenue_loss_pct", "driver_surplus")
COALITION_COLUMNS = (
    "members", "sequence", "total_impatience", "objective", "alt_objective",
    "audits_passed", "warnings",
)
RESULT_COLUMNS = ("scenario", "entity") + PASSENGER_COLUMNS + DRIVER_COLUMNS + COALITION_COLUMNS


class BudgetImbalanceError(HarnessError):
    """@brief Raised when a serialized report breaks x_d + sum x_i = sum G(T_i)."""

    def __init__(self, scenario: str, residual: float):
        super().__init__(f"C1 violated in results for {scenario}: residual {residual:.3e}")
        self.scenario = scenario
        self.residual = residual


@dataclass(frozen=True)
class PassengerRow:
    passenger_id: str
    F: float
    G: float
    phi: float
    x_i: float
    net_payment: float
    impatience: float
    payment_reduction_pct: float
    solo_payment: float
    surplus: float


@dataclass(frozen=True)
class DriverRow:
    x_d: float
    baseline_revenue: float
    revenue_loss_pct: float
    driver_surplus: float


@dataclass(frozen=True)
class CoalitionRow:
    members: tuple
    sequence: tuple
    total_impatience: float
    objective: float
    alt_objective: float
    audits_passed: str
    warnings: tuple = ()


@dataclass(frozen=True)
class Report:
    """
    @brief Everything `run` produces for one scenario.
    @details allocation, baseline, audit and rationality keep the full objects
    behind the rows for callers that need more than the table.
    """

    scenario: str
    passengers: tuple
    driver: DriverRow
    coalition: CoalitionRow
    allocation: object
    baseline: object
    audit: object
    rationality: object

    @property
    def mean_payment_reduction_pct(self) -> float:
        return sum(r.payment_reduction_pct for r in self.passengers) / len(self.passengers)


def report_to_frame(report: Report) -> pd.DataFrame:
    """@brief Flattens a Report into the documented column order."""
    records = []
    for row in report.passengers:
        record = {"scenario": report.scenario, "entity": ENTITY_PASSENGER}
        record.update({name: getattr(row, name) for name in PASSENGER_COLUMNS})
        records.append(record)

    driver = {"scenario": report.scenario, "entity": ENTITY_DRIVER}
    driver.update({name: getattr(report.driver, name) for name in DRIVER_COLUMNS})
    records.append(driver)

    coalition = report.coalition
    records.append({
        "scenario": report.scenario,
        "entity": ENTITY_COALITION,
        "members": " ".join(coalition.members),
        "sequence": " ".join(coalition.sequence),
        "total_impatience": coalition.total_impatience,
        "objective": coalition.objective,
        "alt_objective": coalition.alt_objective,
        "audits_passed": coalition.audits_passed,
        "warnings": "; ".join(coalition.warnings),
    })
    return pd.DataFrame.from_records(records, columns=list(RESULT_COLUMNS))


def write_frame(frame: pd.DataFrame, handle, header: bool = True) -> None:
    frame.to_csv(handle, index=False, header=header, na_rep="", lineterminator="\n")


def write_report(report: Report, file_path: str) -> None:
    """
    @brief Writes the results table of report as UTF-8 CSV.
    @throws OutputPathError if the file cannot be written.
    """
    with open_output(file_path) as handle:
        write_frame(report_to_frame(report), handle)
    logger.info("Wrote results for %s to %s", report.scenario, file_path)


def read_report_table(file_path: str) -> pd.DataFrame:
    """@brief Reads a results table back with exact float round-trip."""
    return pd.read_csv(
        file_path,
        float_precision="round_trip",
        dtype={"scenario": str, "entity": str, "passenger_id": str, "members": str,
               "sequence": str, "audits_passed": str, "warnings": str},
        keep_default_na=False,
        na_values=[""],
    )


def check_budget_balance(table: pd.DataFrame, tolerance: float = BUDGET_TOLERANCE) -> dict:
    """
    @brief Re-asserts C1 on a results table: x_d + sum x_i = sum G per scenario.
    @return Mapping scenario -> residual.
    @throws BudgetImbalanceError when a residual exceeds tolerance.
    """
    residuals = {}
    for scenario, rows in table.groupby("scenario", sort=True):
        passengers = rows[rows["entity"] == ENTITY_PASSENGER]
        drivers = rows[rows["entity"] == ENTITY_DRIVER]
        residual = float(drivers["x_d"].sum() + passengers["x_i"].sum() - passengers["G"].sum())
        residuals[scenario] = residual
        if abs(residual) > tolerance:
            raise BudgetImbalanceError(scenario, residual)
    return residuals
