"""Entanglement, mixedness and Bell-CHSH violation for the two-qubit class E0."""

from .chsh import (
    BellOperator,
    ChshReport,
    bell_operator_matrix,
    chsh_expectation,
    chsh_report,
    horodecki_m,
    horodecki_m_e0,
    optimize_chsh,
)
from .measures import (
    MeasureReport,
    concurrence,
    concurrence_e0,
    entanglement_of_formation,
    linear_entropy,
    linear_entropy_e0,
    measure_report,
    spin_flip,
)
from .regions import (
    Interval,
    PhiFamily,
    Region,
    RegionPoint,
    admissible_interval,
    brute_force_smax,
    classify,
    ellipse_geometry,
    family_state,
    phi_angles,
    phi_family,
    s1,
    s2,
    s_max,
    violating_split,
    witness_pair,
)
from .states import (
    BlochDecomposition,
    DensityMatrix,
    E0Params,
    bloch_decompose,
    e0_from_params,
    load_state,
    mems_state,
    save_state,
    validate_density,
)

__version__ = "0.1.0"

__all__ = [
    "BellOperator",
    "BlochDecomposition",
    "ChshReport",
    "DensityMatrix",
    "E0Params",
    "Interval",
    "MeasureReport",
    "PhiFamily",
    "Region",
    "RegionPoint",
    "admissible_interval",
    "bell_operator_matrix",
    "bloch_decompose",
    "brute_force_smax",
    "chsh_expectation",
    "chsh_report",
    "classify",
    "concurrence",
    "concurrence_e0",
    "e0_from_params",
    "ellipse_geometry",
    "entanglement_of_formation",
    "family_state",
    "horodecki_m",
    "horodecki_m_e0",
    "linear_entropy",
    "linear_entropy_e0",
    "load_state",
    "measure_report",
    "mems_state",
    "optimize_chsh",
    "phi_angles",
    "phi_family",
    "s1",
    "s2",
    "s_max",
    "save_state",
    "spin_flip",
    "validate_density",
    "violating_split",
    "witness_pair",
]
