"""Nonclassical-correlation toolkit for multiqubit pure states.

Quantifies genuine multipartite entanglement (GGM) of N-qubit pure states
and two-qubit nonclassical correlations (quantum discord, Wootters
concurrence), with exact analytic reduced density matrices for weighted
graph states, kicked-top Floquet dynamics and seeded sweep experiments.
"""

__version__ = "0.1.0"

from .errors import CapacityError, ConfigError, InternalConsistencyError
from .graphs import (
    LatticeCase,
    PairNeighborhood,
    WeightedGraph,
    build_graph_state,
    embed_neighborhood,
    eta_correction,
    fully_connected_ggm,
    fully_connected_pair_rdm,
    fully_connected_single_rdm,
    lattice_neighborhood,
    pair_rdm,
    single_qubit_rdm,
    square_lattice_ggm,
    subsystem_rdm_general,
)
from .kicked_top import (
    KickedTopParams,
    StepRecord,
    SymmetricState,
    dicke_expand,
    floquet_step,
    moving_average,
    spin_coherent_state,
    trajectory,
)
from .measures import (
    DiscordSettings,
    GgmResult,
    MeasurementBasis,
    concurrence,
    conditional_entropy,
    discord,
    ggm,
    mutual_information,
)
from .sampling import (
    PairStatistics,
    SeededRng,
    haar_random_pure,
    pair_statistics,
    random_weighted_complete_graph,
)
from .states import (
    DensityMatrix,
    PureState,
    QubitSubset,
    controlled_phase,
    hermitian_eigensystem,
    partial_trace_mixed,
    partial_trace_pure,
    tensor_product,
    von_neumann_entropy,
)

__all__ = [
    "CapacityError",
    "ConfigError",
    "InternalConsistencyError",
    "DensityMatrix",
    "DiscordSettings",
    "GgmResult",
    "KickedTopParams",
    "LatticeCase",
    "MeasurementBasis",
    "PairNeighborhood",
    "PairStatistics",
    "PureState",
    "QubitSubset",
    "SeededRng",
    "StepRecord",
    "SymmetricState",
    "WeightedGraph",
    "build_graph_state",
    "concurrence",
    "conditional_entropy",
    "controlled_phase",
    "dicke_expand",
    "discord",
    "embed_neighborhood",
    "eta_correction",
    "floquet_step",
    "fully_connected_ggm",
    "fully_connected_pair_rdm",
    "fully_connected_single_rdm",
    "ggm",
    "haar_random_pure",
    "hermitian_eigensystem",
    "lattice_neighborhood",
    "moving_average",
    "mutual_information",
    "pair_rdm",
    "pair_statistics",
    "partial_trace_mixed",
    "partial_trace_pure",
    "random_weighted_complete_graph",
    "single_qubit_rdm",
    "spin_coherent_state",
    "square_lattice_ggm",
    "subsystem_rdm_general",
    "tensor_product",
    "trajectory",
    "von_neumann_entropy",
]
