"""Quantum light transport in Jx (parabolic-coupling) photonic lattices."""

from .lattice import (
    LatticeSpec,
    TransferMatrix,
    build_lattice,
    coupling_matrix,
    mirror_mode,
    transfer_matrices,
    transfer_matrix,
    transfer_matrix_oracle,
)
from .fock import (
    CorrelationMap,
    FockState,
    correlation_map,
    evolve_fock,
    noon_state,
    single_photon,
    two_photon_fock,
)
from .gaussian import (
    GaussianState,
    SqueezingReport,
    coherent_state,
    evolve_gaussian,
    gaussian_overlap,
    squeezed_vacuum,
    squeezing_closed_form,
    squeezing_factors,
    vacuum,
    witness_m,
)
from .config import ConfigError, ScenarioConfig
from .observables import (
    FidelitySeries,
    ScenarioReport,
    fock_fidelity,
    mean_photon_series,
    run_scenario,
    transfer_and_revival_series,
)

__version__ = "0.1.0"
