"""Two-qubit separability and negativity from principal minors of the partial transpose.

The minor route (:func:`negativity_minors`) never calls an eigensolver: it
sums the principal minors of ``rho^T_A`` into the characteristic quartic and
takes its smallest root.  :func:`negativity_eigen` is an independent Jacobi
eigenvalue route for cross-checking.
"""

from .errors import (
    CrossCheckError,
    DensityMatrixError,
    NoConvergence,
    NonFiniteEntry,
    NotHermitian,
    NotPSD,
    ResidualTooLarge,
    TraceNotOne,
)
from .hermitian import (
    DensityMatrix,
    Subsystem,
    kron2,
    partial_trace,
    partial_transpose,
    validate_density,
)
from .minors import (
    CharPolyCoefficients,
    MinorSet,
    NegativityReport,
    SeparabilityVerdict,
    minor_sums,
    negative_minor_sum,
    negativity_minors,
    principal_minors,
    sylvester_separable,
)
from .oracle import EigenDecomposition, eigvalsh4, negativity_eigen
from .quartic import quartic_real_roots
from .states import (
    BellKind,
    SeparableEnsemble,
    bell_state,
    product_state,
    random_density,
    random_local_unitary,
    random_separable,
    werner_state,
)

__all__ = [
    "BellKind",
    "CharPolyCoefficients",
    "CrossCheckError",
    "DensityMatrix",
    "DensityMatrixError",
    "EigenDecomposition",
    "MinorSet",
    "NegativityReport",
    "NoConvergence",
    "NonFiniteEntry",
    "NotHermitian",
    "NotPSD",
    "ResidualTooLarge",
    "SeparabilityVerdict",
    "SeparableEnsemble",
    "Subsystem",
    "TraceNotOne",
    "bell_state",
    "eigvalsh4",
    "kron2",
    "minor_sums",
    "negative_minor_sum",
    "negativity_eigen",
    "negativity_minors",
    "partial_trace",
    "partial_transpose",
    "principal_minors",
    "product_state",
    "quartic_real_roots",
    "random_density",
    "random_local_unitary",
    "random_separable",
    "sylvester_separable",
    "validate_density",
    "werner_state",
]
