"""Left cyclic partitions of n-cubes and the sink-reversal chip firing game."""

from .hypercube import CubeCycle, even_cycle, gray_cycle, neighbors, parity
from .partition import (
    InvalidPartitionError,
    LeftCyclicPartition,
    ValidationReport,
    Violation,
    construct_even,
    construct_odd,
    double_minus_1,
    double_minus_3,
    h4_order5,
    h4_order7,
    lift,
    max_odd,
    validate,
)
from .dynamics import (
    EvolutionResult,
    Orientation,
    PARALLEL,
    Schedule,
    block_step,
    chips,
    evolve,
    from_partition,
    hamiltonian_orientation,
    parallel_step,
    sinks,
)
from .oracle import (
    PeriodCensus,
    SearchOutcome,
    census,
    check_lemma23,
    random_orientation,
    reference_period,
    search_partition,
)

__all__ = [
    "CubeCycle", "even_cycle", "gray_cycle", "neighbors", "parity",
    "InvalidPartitionError", "LeftCyclicPartition", "ValidationReport",
    "Violation", "construct_even", "construct_odd", "double_minus_1",
    "double_minus_3", "h4_order5", "h4_order7", "lift", "max_odd", "validate",
    "EvolutionResult", "Orientation", "PARALLEL", "Schedule", "block_step",
    "chips", "evolve", "from_partition", "hamiltonian_orientation",
    "parallel_step", "sinks",
    "PeriodCensus", "SearchOutcome", "census", "check_lemma23",
    "random_orientation", "reference_period", "search_partition",
]
