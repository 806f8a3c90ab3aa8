# -*- coding: utf-8 -*-
"""
@file constraint_audit.py
@brief Audits an allocation against constraints C1-C6 and individual rationality.
@details
Audits never raise; each constraint yields an AuditEntry with its slack.
  C1: x_d + sum x_i - rho * sum F          (== 0 within tolerance)
  C2: x_d                                  (> 0)
  C3: x_d - beta * sum F                   (>= 0)
  C4: min(alpha - rho, rho - beta, beta)   (>= 0, beta > 0)
  C5: min x_i                              (> 0; skipped for the baseline)
  C6: I(S, sigma) - I(S, sigma*)           (<= tolerance) while |S| is within
      the exhaustive bound, otherwise the largest adjacent-swap gain.
"""

import logging
from dataclasses import dataclass

from src.impatience import (
    EXHAUSTIVE_BOUND,
    SequenceError,
    max_exchange_gain,
    optimal_sequence_exhaustive,
    total_impatience,
)
from src.model import base_fare, surge_fare

logger = logging.getLogger(__name__)

AUDIT_TOLERANCE = 1e-9

CONSTRAINTS = ("C1", "C2", "C3", "C4", "C5", "C6")


@dataclass(frozen=True)
class AuditEntry:
    constraint: str
    passed: bool
    slack: float
    skipped: bool = False
    detail: str = ""


@dataclass(frozen=True)
class ConstraintAudit:
    """@brief One AuditEntry per constraint, in C1..C6 order."""

    entries: tuple

    def entry(self, constraint: str) -> AuditEntry:
        for audit_entry in self.entries:
            if audit_entry.constraint == constraint:
                return audit_entry
        raise KeyError(constraint)

    @property
    def evaluated(self) -> tuple:
        return tuple(e for e in self.entries if not e.skipped)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.evaluated)

    @property
    def failed(self) -> tuple:
        return tuple(e.constraint for e in self.evaluated if not e.passed)

    def summary(self) -> str:
        """@brief e.g. "6/6" or "5/5" when a constraint was skipped."""
        evaluated = self.evaluated
        return f"{sum(e.passed for e in evaluated)}/{len(evaluated)}"


def _audit_c6(allocation, bound: int, tolerance: float) -> AuditEntry:
    passengers = allocation.passengers
    try:
        current = total_impatience(passengers, allocation.sequence).total
    except SequenceError as e:
        return AuditEntry("C6", passed=False, slack=float("inf"), detail=str(e))

    if len(passengers) <= bound:
        _, optimum = optimal_sequence_exhaustive(passengers, bound)
        slack = current - optimum
        return AuditEntry(
            "C6",
            passed=slack <= tolerance * max(1.0, abs(optimum)),
            slack=slack,
            detail="exhaustive",
        )

    gain = max_exchange_gain(passengers, allocation.sequence)
    return AuditEntry("C6", passed=gain <= tolerance * max(1.0, abs(current)),
                      slack=gain, detail="adjacent exchange")


def audit_constraints(allocation, params, bound: int = EXHAUSTIVE_BOUND,
                      tolerance: float = AUDIT_TOLERANCE) -> ConstraintAudit:
    """
    @brief Evaluates C1-C6 for allocation under params.
    @param allocation Allocation to audit.
    @param params PricingParams the allocation was computed with.
    @param bound Largest coalition verified by exhaustive enumeration for C6.
    @param tolerance Absolute tolerance for equality and sign tests.
    @return ConstraintAudit.
    """
    fares_total = sum(base_fare(p.travel, params) for p in allocation.passengers)
    compensation = allocation.total_compensation

    c1 = allocation.x_d + compensation - params.rho * fares_total
    c3 = allocation.x_d - params.beta * fares_total
    c4 = min(params.alpha - params.rho, params.rho - params.beta, params.beta)

    entries = [
        AuditEntry("C1", passed=abs(c1) <= tolerance, slack=c1),
        AuditEntry("C2", passed=allocation.x_d > 0, slack=allocation.x_d),
        AuditEntry("C3", passed=c3 >= -tolerance, slack=c3),
        AuditEntry("C4", passed=c4 >= 0 and params.beta > 0, slack=c4),
    ]
    c5 = min(allocation.x.values()) if allocation.x else 0.0
    if allocation.is_baseline:
        entries.append(AuditEntry("C5", passed=True, slack=c5, skipped=True, detail="baseline"))
    else:
        entries.append(AuditEntry("C5", passed=c5 > 0, slack=c5))
    entries.append(_audit_c6(allocation, bound, tolerance))

    audit = ConstraintAudit(tuple(entries))
    if audit.failed:
        logger.warning("Constraint audit failed for %s: %s",
                       " ".join(allocation.coalition), ", ".join(audit.failed))
    return audit


@dataclass(frozen=True)
class RationalityReport:
    """
    @brief Individual rationality slack per participant.
    @details
    passenger_slack[i] = alpha * F_i - (G_i - x_i); driver_slack = x_d - beta * sum F.
    Nonnegative slack means the participant is no worse off in the coalition.
    """

    passenger_slack: dict
    driver_slack: float
    violations: tuple

    @property
    def all_passed(self) -> bool:
        return not self.violations


def individual_rationality_check(coalition, allocation, params,
                                 tolerance: float = AUDIT_TOLERANCE) -> RationalityReport:
    """
    @brief Net payment never exceeds willingness to pay; driver earns at least beta * sum F.
    """
    passenger_slack = {}
    violations = []
    fares_total = 0.0
    for passenger in sorted(coalition, key=lambda p: p.id):
        fare = base_fare(passenger.travel, params)
        fares_total += fare
        net_payment = surge_fare(passenger.travel, params) - allocation.x.get(passenger.id, 0.0)
        slack = params.alpha * fare - net_payment
        passenger_slack[passenger.id] = slack
        if slack < -tolerance:
            violations.append(passenger.id)

    driver_slack = allocation.x_d - params.beta * fares_total
    if driver_slack < -tolerance:
        violations.append("driver")

    return RationalityReport(
        passenger_slack=passenger_slack,
        driver_slack=driver_slack,
        violations=tuple(violations),
    )
