"""Thermal quantum correlations and work extraction for a two-qubit XYZ chain.

Exact numerics for the anisotropic two-qubit Heisenberg model in a z field
with DM and KSEA couplings: Gibbs states, entropic steering, concurrence,
extracted work with its entropic decomposition, and a sweep/preset CLI.
"""

from .correlations import (
    NotXState,
    PauliDistribution,
    SteeringReport,
    concurrence_wootters,
    concurrence_x,
    conditional_entropy_sum,
    pauli_joint_distribution,
    steering,
)
from .model import (
    CrosscheckReport,
    ModelParams,
    NonPositiveTemperature,
    ThermalState,
    analytic_crosscheck,
    build_hamiltonian,
    interaction_hamiltonian,
    local_partition_functions,
    thermal_state,
    zeeman_hamiltonians,
)
from .qmath import (
    EigenSystem,
    NegativeEigenvalue,
    NonHermitianInput,
    NotADistribution,
    eigen_hermitian,
    kron,
    partial_trace,
    shannon_entropy,
    von_neumann_entropy,
)
from .svg import emit_svg
from .sweep import (
    ParseError,
    SweepConfig,
    SweepResult,
    UnknownPreset,
    ValidationError,
    emit_csv,
    figure_preset,
    parse_config,
    run_sweep,
)
from .thermo import ThermoReport, efficiency, entropic_terms, extracted_work, interaction_energy

__all__ = [
    "CrosscheckReport",
    "EigenSystem",
    "ModelParams",
    "NegativeEigenvalue",
    "NonHermitianInput",
    "NonPositiveTemperature",
    "NotADistribution",
    "NotXState",
    "ParseError",
    "PauliDistribution",
    "SteeringReport",
    "SweepConfig",
    "SweepResult",
    "ThermalState",
    "ThermoReport",
    "UnknownPreset",
    "ValidationError",
    "analytic_crosscheck",
    "build_hamiltonian",
    "concurrence_wootters",
    "concurrence_x",
    "conditional_entropy_sum",
    "efficiency",
    "eigen_hermitian",
    "emit_csv",
    "emit_svg",
    "entropic_terms",
    "extracted_work",
    "figure_preset",
    "interaction_energy",
    "interaction_hamiltonian",
    "kron",
    "local_partition_functions",
    "parse_config",
    "partial_trace",
    "pauli_joint_distribution",
    "run_sweep",
    "shannon_entropy",
    "steering",
    "thermal_state",
    "von_neumann_entropy",
    "zeeman_hamiltonians",
]

__version__ = "0.1.0"
