"""Heralded nonclassical photon states from two resonantly coupled bosonic modes.

Two quantized modes exchange excitations under H = lam (a^dag b + b^dag a).
Mode b starts with a single photon; detecting N photons in b after a coupling
phase lam*t heralds a conditioned, generally sub-Poissonian state in mode a.
The package provides closed-form heralded observables for coherent, thermal,
and squeezed-vacuum inputs, plus an independent truncated-Fock-space pipeline
(exact sector eigendecomposition -> projection -> moments) used to
cross-check every closed form.
"""

from .closedform import (
    CoherentCoefficients,
    DegenerateHeraldError,
    DegenerateInputError,
    HeraldRecord,
    SqueezedCoefficients,
    coherent_coeffs,
    coherent_record,
    hermite_at_zero,
    squeezed_coeffs,
    squeezed_overlap,
    squeezed_record,
    thermal_record,
    thermal_series_tail,
)
from .dynamics import BlockDecomposition, SectorBlock, build_blocks, evolve, evolve_ensemble, factored_evolve
from .fock import (
    CutoffError,
    DiagonalMixture,
    ModeEnsemble,
    SingleModeState,
    TruncationConfig,
    TwoModeState,
    coherent_state,
    fock_state,
    lower_a,
    lower_b,
    lower_mode,
    raise_a,
    raise_b,
    raise_mode,
    squeezed_vacuum_state,
    tensor_with_number,
    thermal_weights,
)
from .heralding import HeraldedState, herald_spectrum, project_ensemble, project_pure
from .observables import HeadroomError, PhotonStatistics, a2ad2_moment, photon_statistics
from .scenarios import (
    Coherent,
    FieldCheck,
    ScenarioSpec,
    SqueezedVacuum,
    Thermal,
    VerifyReport,
    closed_form_record,
    compare_point,
    default_series_cut,
    default_truncation,
    initial_pure_state,
    oracle_record,
    run_verify,
    scenario_label,
    scenario_record,
    thermal_ensemble,
    verify_points,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # fock
    "CutoffError",
    "TruncationConfig",
    "SingleModeState",
    "DiagonalMixture",
    "TwoModeState",
    "ModeEnsemble",
    "fock_state",
    "coherent_state",
    "squeezed_vacuum_state",
    "thermal_weights",
    "tensor_with_number",
    "raise_mode",
    "lower_mode",
    "raise_a",
    "raise_b",
    "lower_a",
    "lower_b",
    # dynamics
    "SectorBlock",
    "BlockDecomposition",
    "build_blocks",
    "evolve",
    "evolve_ensemble",
    "factored_evolve",
    # heralding
    "HeraldedState",
    "project_pure",
    "project_ensemble",
    "herald_spectrum",
    # observables
    "PhotonStatistics",
    "photon_statistics",
    "a2ad2_moment",
    "HeadroomError",
    # closed forms
    "HeraldRecord",
    "DegenerateHeraldError",
    "DegenerateInputError",
    "CoherentCoefficients",
    "SqueezedCoefficients",
    "hermite_at_zero",
    "coherent_coeffs",
    "coherent_record",
    "thermal_record",
    "thermal_series_tail",
    "squeezed_overlap",
    "squeezed_coeffs",
    "squeezed_record",
    # scenarios / verification
    "Coherent",
    "Thermal",
    "SqueezedVacuum",
    "ScenarioSpec",
    "scenario_label",
    "default_truncation",
    "default_series_cut",
    "initial_pure_state",
    "thermal_ensemble",
    "oracle_record",
    "closed_form_record",
    "scenario_record",
    "FieldCheck",
    "VerifyReport",
    "verify_points",
    "compare_point",
    "run_verify",
]
