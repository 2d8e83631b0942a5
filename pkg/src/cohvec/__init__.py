"""Unitary dynamics of n-qubit density operators as real coherence vectors.

A density operator is stored as its expansion coefficients over products of
normalized Pauli matrices (lambda_j = sigma_j / sqrt(2)).  Hamiltonians
expressed in the same basis act on that real vector through sparse adjoint
matrices assembled from the su(2) structure constants, and the evolution is
computed with closed-form Rodrigues exponentials or a generic matrix
exponential.  Separability across any cut can be checked on the fly through
the partial-transpose criterion without leaving the parametrization.
"""

from .adjoint import (
    GeneratorMatrix,
    HamiltonianCoeffs,
    bracket_decompose,
    build_aad,
    build_ad,
    hamiltonian_generator,
)
from .eigen import NumericalError, eigvalsh
from .gates import NamedGate, cnot_gate, cnot_hamiltonian, named_state, r_cnot
from .pauli import SQRT2, AdAadPair, ad_aad, lambda_matrix, structure_constants
from .propagate import (
    Schedule,
    Trajectory,
    cartan_exp,
    expm,
    expm_taylor,
    hilbert_oracle,
    local_exp,
    propagate,
    rodrigues_exp,
    rodrigues_frequency,
)
from .states import (
    CoherenceTensor,
    all_multi_indexes,
    basis_matrices,
    basis_matrix,
    digits_of,
    from_density,
    index_of,
    partial_trace,
    partial_transpose,
    ppt_min_eigenvalue,
    product,
    purity,
    to_density,
    validate_multi_index,
)

__version__ = "0.1.0"

__all__ = [
    "AdAadPair",
    "CoherenceTensor",
    "GeneratorMatrix",
    "HamiltonianCoeffs",
    "NamedGate",
    "NumericalError",
    "Schedule",
    "SQRT2",
    "Trajectory",
    "ad_aad",
    "all_multi_indexes",
    "basis_matrices",
    "basis_matrix",
    "bracket_decompose",
    "build_aad",
    "build_ad",
    "cartan_exp",
    "cnot_gate",
    "cnot_hamiltonian",
    "digits_of",
    "eigvalsh",
    "expm",
    "expm_taylor",
    "from_density",
    "hamiltonian_generator",
    "hilbert_oracle",
    "index_of",
    "lambda_matrix",
    "local_exp",
    "named_state",
    "partial_trace",
    "partial_transpose",
    "ppt_min_eigenvalue",
    "product",
    "propagate",
    "purity",
    "r_cnot",
    "rodrigues_exp",
    "rodrigues_frequency",
    "structure_constants",
    "to_density",
    "validate_multi_index",
]
