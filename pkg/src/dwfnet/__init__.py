"""Discrete Wigner functions of multiqubit states over finite-field phase
spaces: quantum-net enumeration and classification, Wigner/Stokes/density
transforms, and net-general subsystem reduction maps.
"""

from .errors import (
    DegeneracyError,
    DimensionMismatchError,
    DwfError,
    FieldDomainError,
    NetConstructionError,
    NetMismatchError,
    NonCommutingError,
    PurityError,
    UnsupportedDimensionError,
    UnsupportedNetError,
    ValidationError,
)
from .ffield import GF2m
from .phasespace import Line, PhaseSpace, Point, Striation
from .nets import (
    NetContext,
    ProductReport,
    QuantumNet,
    build_net,
    classify_nets,
    detect_product_structure,
    digits_of,
    enumerate_nets,
    id_of,
    net_context,
    translate_net_id,
)
from .wigner import (
    DensityState,
    WignerFunction,
    dwf_from_rho,
    line_probability,
    purity_from_dwf,
    random_density,
    random_pure,
    rho_from_dwf,
)
from .stokes import (
    HadamardMatrix,
    StokesVector,
    conjugation_matrix,
    hadamard_matrix,
    pauli_words,
    spinflip_matrix,
    stokes_from_rho,
)
from .reduction import (
    KeepSet,
    ReductionMap,
    concurrence_from_dwf,
    convert_net,
    shortcut_reduce,
    reduce_dwf,
    reduction_map,
    selection_matrix,
)
from .verify import SUITES, run_suites

__version__ = "0.1.0"

__all__ = [
    "GF2m",
    "PhaseSpace",
    "Point",
    "Line",
    "Striation",
    "NetContext",
    "QuantumNet",
    "ProductReport",
    "net_context",
    "build_net",
    "enumerate_nets",
    "classify_nets",
    "detect_product_structure",
    "translate_net_id",
    "digits_of",
    "id_of",
    "DensityState",
    "WignerFunction",
    "dwf_from_rho",
    "rho_from_dwf",
    "line_probability",
    "purity_from_dwf",
    "random_density",
    "random_pure",
    "StokesVector",
    "HadamardMatrix",
    "stokes_from_rho",
    "hadamard_matrix",
    "conjugation_matrix",
    "spinflip_matrix",
    "pauli_words",
    "KeepSet",
    "ReductionMap",
    "selection_matrix",
    "reduction_map",
    "reduce_dwf",
    "convert_net",
    "shortcut_reduce",
    "concurrence_from_dwf",
    "SUITES",
    "run_suites",
    "DwfError",
    "FieldDomainError",
    "UnsupportedDimensionError",
    "DimensionMismatchError",
    "NonCommutingError",
    "DegeneracyError",
    "NetConstructionError",
    "NetMismatchError",
    "ValidationError",
    "PurityError",
    "UnsupportedNetError",
]
