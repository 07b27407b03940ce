"""Anti-symplectic involutions, reversible symplectic maps, and the explicit
maps identifying them with each other and with cosets of the embedded
general linear group.

Every map here is constructive and verified on the spot: outputs that are
guaranteed by theory to land in a given space are checked exactly, and a
failure raises InvariantViolation (a bug, never a user error).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .matrix import Matrix, rat
from .core import (
    commutes_with_reversor,
    gl_witness,
    identity,
    is_anti_symplectic_involution,
    is_reversible_symplectic,
    require_symplectic,
    reversor_times,
)
from .lagrangian import (
    Subspace,
    basis_matrix,
    symplectic_basis_from_splitting,
)

HALF = rat("1/2")


@dataclass(frozen=True)
class EigenSplit:
    """The +1/-1 eigenspaces of an anti-symplectic involution.

    Both are Lagrangian and together they split the ambient space.
    """

    plus: Subspace
    minus: Subspace


def _require_involution(S: Matrix, context: str) -> None:
    if not is_anti_symplectic_involution(S):
        raise DomainError(f"{context} requires an anti-symplectic involution")


def reversible_to_involution(psi: Matrix) -> Matrix:
    """R psi: carries reversible symplectic maps to anti-symplectic involutions."""
    if not is_reversible_symplectic(psi):
        raise DomainError("reversible_to_involution requires R psi R = psi^(-1)")
    out = reversor_times(psi)
    if not is_anti_symplectic_involution(out):
        raise InvariantViolation("R psi failed the involution predicates")
    return out


def involution_to_reversible(S: Matrix) -> Matrix:
    """R S: inverse of reversible_to_involution."""
    _require_involution(S, "involution_to_reversible")
    out = reversor_times(S)
    if not is_reversible_symplectic(out):
        raise InvariantViolation("R S failed the reversibility predicate")
    return out


def conjugated_reversor(psi: Matrix) -> Matrix:
    """psi^(-1) R psi, an anti-symplectic involution for any symplectic psi.

    Constant on left cosets of the embedded general linear group, which is
    exactly the stabilizer of R under this action.
    """
    require_symplectic(psi, "conjugated_reversor")
    out = psi.inverse() @ reversor_times(psi)
    if not is_anti_symplectic_involution(out):
        raise InvariantViolation("conjugated reversor failed the involution predicates")
    return out


def eigenspace_split(S: Matrix) -> EigenSplit:
    """Split the ambient space into the +1 and -1 eigenspaces of S.

    The eigenprojections (1 +/- S)/2 have full eigenspace image, so the
    spans of their columns are the eigenspaces; both come out Lagrangian.
    """
    _require_involution(S, "eigenspace_split")
    n = S.rows // 2
    one = identity(2 * n)
    plus = Subspace((one + S) * HALF)
    minus = Subspace((one - S) * HALF)
    if plus.dimension != n or minus.dimension != n:
        raise InvariantViolation("eigenspaces of an anti-symplectic involution must have dimension n")
    return EigenSplit(plus, minus)


def reversor_conjugator(S: Matrix) -> Matrix:
    """Produce a symplectic psi with psi^(-1) R psi = S, exactly.

    Pipeline: eigenspace split of S, symplectic basis adapted to it
    (+1 eigenspace first), assemble the basis matrix, invert.  All steps
    are deterministic, so equal inputs give byte-equal outputs.
    """
    split = eigenspace_split(S)
    adapted = symplectic_basis_from_splitting(split.plus, split.minus)
    P = basis_matrix(adapted)
    psi = P.inverse()
    if P @ reversor_times(psi) != S:
        raise InvariantViolation("conjugator does not carry R to its target involution")
    return psi


def coset_witness(psi1: Matrix, psi2: Matrix) -> Matrix | None:
    """Decide whether psi1 and psi2 lie in the same left coset of the
    embedded general linear group.

    Returns A with psi1 psi2^(-1) = embed_gl(A) when the cosets agree
    (equivalently, when both matrices conjugate R to the same involution),
    or None when they differ.
    """
    require_symplectic(psi1, "coset_witness")
    require_symplectic(psi2, "coset_witness")
    if psi1.shape != psi2.shape:
        raise DomainError("coset_witness needs matrices of equal size")
    quotient = psi1 @ psi2.inverse()
    if not commutes_with_reversor(quotient):
        return None
    return gl_witness(quotient)
