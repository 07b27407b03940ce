"""Exact rational linear symplectic algebra.

Predicates and generators for the symplectic group, anti-symplectic
involutions and the reversible symplectic maps; Lagrangian splittings and
the symplectic bases adapted to them; conjugation normal forms; charts of
involutions over the Lagrangian Grassmannian; and a floating-point bridge
to symmetric unitary matrices.  Everything rational is exact and every
structural claim is machine-checked by the `verify` battery.
"""

from .errors import (
    DimensionError,
    DomainError,
    FormatError,
    InvariantViolation,
    LinSympError,
    NotSymplecticError,
    SingularMatrixError,
)
from .matrix import Matrix, Rat, rat, rat_str, vector
from .core import (
    PredicateReport,
    Violation,
    blocks,
    commutes_with_reversor,
    embed_gl,
    gl_witness,
    is_anti_symplectic,
    is_anti_symplectic_involution,
    is_involution,
    is_reversible_symplectic,
    is_symplectic,
    omega,
    standard_reversor,
    symplectic_block_report,
    symplectic_form,
)
from .lagrangian import (
    Subspace,
    SymplecticBasis,
    basis_matrix,
    is_lagrangian,
    project_along,
    symplectic_basis_from_splitting,
)
from .involutions import (
    EigenSplit,
    conjugated_reversor,
    coset_witness,
    eigenspace_split,
    involution_to_reversible,
    reversible_to_involution,
    reversor_conjugator,
)
from .factorization import (
    InvolutionPair,
    factor_block_diagonal,
    factor_sl2,
    normalize_reversible,
    reverses,
)
from .grassmannian import (
    ChartPoint,
    chart_coordinates,
    fixed_subspace,
    from_symmetric_unitary,
    involution_from_chart,
    to_symmetric_unitary,
)
from .sampling import (
    SampleConfig,
    SplitMix64,
    derive_seed,
    sample_anti_symplectic_involution,
    sample_invertible,
    sample_lagrangian,
    sample_reversible,
    sample_symmetric_unitary,
    sample_symplectic,
)
from .verify import PROPERTIES, run_all

__version__ = "0.1.0"
