# carpool/src/coalition/__init__.py

from .games import (
    GameError,
    GameTooLargeError,
    IValueFunction,
    ImpatienceGame,
    SurplusGame,
    TabularGame,
)
from .shapley import (
    METHOD_EXACT,
    METHOD_MONTE_CARLO,
    SHAPLEY_EXACT_MAX,
    ShapleyResult,
    shapley_exact,
    shapley_montecarlo,
    subset_values,
)
from .axioms import (
    DUMMY,
    EFFICIENCY,
    SYMMETRY,
    AxiomCheck,
    AxiomReport,
    verify_axioms,
)

__all__ = [
    "GameError",
    "GameTooLargeError",
    "IValueFunction",
    "ImpatienceGame",
    "SurplusGame",
    "TabularGame",
    "METHOD_EXACT",
    "METHOD_MONTE_CARLO",
    "SHAPLEY_EXACT_MAX",
    "ShapleyResult",
    "shapley_exact",
    "shapley_montecarlo",
    "subset_values",
    "DUMMY",
    "EFFICIENCY",
    "SYMMETRY",
    "AxiomCheck",
    "AxiomReport",
    "verify_axioms",
]
