# carpool/src/impatience/__init__.py

from .sequence import (
    CoalitionTooLargeError,
    ImpatienceBreakdown,
    SequenceError,
    SequenceMismatchError,
    ServiceSequence,
    UnknownPassengerError,
    exchange_delta,
    impatience_of,
    index_coalition,
    predecessors,
    total_impatience,
)
from .sequence_optimizer import (
    EXHAUSTIVE_BOUND,
    SOLVER_EXHAUSTIVE,
    SOLVER_SMITH,
    is_exchange_optimal,
    max_exchange_gain,
    optimal_sequence,
    optimal_sequence_exhaustive,
    optimal_sequence_smith,
)

__all__ = [
    "CoalitionTooLargeError",
    "ImpatienceBreakdown",
    "SequenceError",
    "SequenceMismatchError",
    "ServiceSequence",
    "UnknownPassengerError",
    "exchange_delta",
    "impatience_of",
    "index_coalition",
    "predecessors",
    "total_impatience",
    "EXHAUSTIVE_BOUND",
    "SOLVER_EXHAUSTIVE",
    "SOLVER_SMITH",
    "is_exchange_optimal",
    "max_exchange_gain",
    "optimal_sequence",
    "optimal_sequence_exhaustive",
    "optimal_sequence_smith",
]
