# carpool/src/allocation/__init__.py

from .split_rules import (
    AllocationError,
    EqualSplit,
    ISplitRule,
    NonPositiveShapleyError,
    ShapleyProportionalSplit,
    get_split_rule,
)
from .pca_allocator import (
    BASELINE_RULE,
    Allocation,
    EmptyPoolError,
    PlayerMismatchError,
    baseline_allocate,
    compensation_pool,
    driver_revenue,
    evaluate_objective,
    pca_allocate,
    total_collected,
    with_warnings,
)
from .constraint_audit import (
    CONSTRAINTS,
    AuditEntry,
    ConstraintAudit,
    RationalityReport,
    audit_constraints,
    individual_rationality_check,
)
from .coalition_selector import COALITION_SEARCH_MAX, select_coalition

__all__ = [
    "AllocationError",
    "EqualSplit",
    "ISplitRule",
    "NonPositiveShapleyError",
    "ShapleyProportionalSplit",
    "get_split_rule",
    "BASELINE_RULE",
    "Allocation",
    "EmptyPoolError",
    "PlayerMismatchError",
    "baseline_allocate",
    "compensation_pool",
    "driver_revenue",
    "evaluate_objective",
    "pca_allocate",
    "total_collected",
    "with_warnings",
    "CONSTRAINTS",
    "AuditEntry",
    "ConstraintAudit",
    "RationalityReport",
    "audit_constraints",
    "individual_rationality_check",
    "COALITION_SEARCH_MAX",
    "select_coalition",
]
