"""Entanglement-assisted capacities of Pauli channels over definite and
superposed causal orders, with an exact density-matrix engine and a seeded
Monte Carlo sampler for independent verification."""

from ._kernels import active_backend
from .capacity import (
    CapacityReport,
    Family,
    Trajectory,
    binary_entropy,
    bottleneck,
    capacity_classical_trajectory,
    capacity_from_transition,
    capacity_pauli,
    capacity_quantum_trajectory,
    capacity_quantum_trajectory_mixture,
    depolarizing_reference_curves,
    family_capacity,
    family_channels,
    gain_and_violation,
    quantum_bounds_bitphase,
    xlog2x,
)
from .montecarlo import MonteCarloEstimate, monte_carlo_switch
from .oracle import (
    SwitchOracleResult,
    mutual_information,
    oracle_classical,
    oracle_switch,
    switch_kraus_operators,
)
from .pauli import (
    BELL_VECTORS,
    OUTCOME_OF_PAULI,
    PAULI_MATRICES,
    PauliChannel,
    SignedPauli,
    anticommutes,
    bell_measure,
    bell_projector,
    channel_apply,
    check_density_matrix,
    check_distribution,
    epr_state,
    epr_transition,
    pauli_product,
)
from .sweep import (
    CSV_HEADER,
    BoundaryError,
    Mode,
    SweepConfig,
    SweepRecord,
    emit,
    find_violation_boundary,
    render,
    run_sweep,
)
from .trajectory import (
    ControlOutcome,
    SwitchComposition,
    ZeroProbabilityBranchError,
    collapse,
    compose_classical,
    compose_switch,
)

__version__ = "0.1.0"

__all__ = [
    "BELL_VECTORS",
    "CSV_HEADER",
    "OUTCOME_OF_PAULI",
    "PAULI_MATRICES",
    "BoundaryError",
    "CapacityReport",
    "ControlOutcome",
    "Family",
    "Mode",
    "MonteCarloEstimate",
    "PauliChannel",
    "SignedPauli",
    "SweepConfig",
    "SweepRecord",
    "SwitchComposition",
    "SwitchOracleResult",
    "Trajectory",
    "ZeroProbabilityBranchError",
    "active_backend",
    "anticommutes",
    "bell_measure",
    "bell_projector",
    "binary_entropy",
    "bottleneck",
    "capacity_classical_trajectory",
    "capacity_from_transition",
    "capacity_pauli",
    "capacity_quantum_trajectory",
    "capacity_quantum_trajectory_mixture",
    "channel_apply",
    "check_density_matrix",
    "check_distribution",
    "collapse",
    "compose_classical",
    "compose_switch",
    "depolarizing_reference_curves",
    "emit",
    "epr_state",
    "epr_transition",
    "family_capacity",
    "family_channels",
    "find_violation_boundary",
    "gain_and_violation",
    "monte_carlo_switch",
    "mutual_information",
    "oracle_classical",
    "oracle_switch",
    "pauli_product",
    "quantum_bounds_bitphase",
    "render",
    "run_sweep",
    "switch_kraus_operators",
    "xlog2x",
]
