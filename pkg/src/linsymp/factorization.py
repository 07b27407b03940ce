"""Factoring symplectic maps into two anti-symplectic involutions and
normalizing them, by conjugation, into the reversible class.

A general closed-form factorizer exists here only for 2x2 blocks and their
block-diagonal direct sums; that is enough to exercise the normalization
pipeline at every half-dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, DomainError, InvariantViolation
from .matrix import Matrix, ZERO
from .core import (
    is_anti_symplectic_involution,
    is_reversible_symplectic,
    is_symplectic,
    require_symplectic,
)
from .involutions import reversor_conjugator


@dataclass(frozen=True)
class InvolutionPair:
    """Involutions T, S with T S equal to a given symplectic map."""

    T: Matrix
    S: Matrix

    def check(self) -> bool:
        return (
            is_anti_symplectic_involution(self.T)
            and is_anti_symplectic_involution(self.S)
            and bool(is_symplectic(self.T @ self.S))
        )


def reverses(S: Matrix, phi: Matrix) -> bool:
    """True iff S phi S = phi^(-1); equivalently, phi S squares to 1."""
    if not is_anti_symplectic_involution(S):
        raise DomainError("reverses requires an anti-symplectic involution")
    require_symplectic(phi, "reverses")
    if S.shape != phi.shape:
        raise DimensionError("reverses needs matrices of equal size")
    return S @ phi @ S == phi.inverse()


def factor_sl2(phi: Matrix) -> InvolutionPair:
    """Factor a determinant-one 2x2 matrix as T S with both factors
    anti-symplectic involutions.

    S is sought with zero trace and determinant -1 (exactly the 2x2
    anti-symplectic involutions); T := phi S then has zero trace and
    determinant -1 automatically.  Case analysis on phi = [[a, b], [c, d]]:

    * b != 0:  S = [[1, 0], [(d - a)/b, -1]]
    * else c != 0:  S = [[1, (d - a)/c], [0, -1]]
    * else phi = diag(a, 1/a):  S = [[0, 1], [1, 0]]

    Each branch stays inside the rationals, so the factorization is exact.
    """
    if phi.shape != (2, 2):
        raise DimensionError("factor_sl2 expects a 2x2 matrix")
    if phi.det() != 1:
        raise DomainError("factor_sl2 expects determinant one")
    a, b = phi[0, 0], phi[0, 1]
    c, d = phi[1, 0], phi[1, 1]
    if b != 0:
        S = Matrix.from_rows([[1, 0], [(d - a) / b, -1]])
    elif c != 0:
        S = Matrix.from_rows([[1, (d - a) / c], [0, -1]])
    else:
        S = Matrix.from_rows([[0, 1], [1, 0]])
    pair = InvolutionPair(T=phi @ S, S=S)
    if not pair.check() or pair.T @ pair.S != phi:
        raise InvariantViolation("2x2 factorization failed its defining identities")
    return pair


def _interleave(blocks_2x2: list[Matrix]) -> Matrix:
    # Block i lands in coordinates (q_i, p_i) of the (q_1..q_n, p_1..p_n) order.
    n = len(blocks_2x2)
    entries = [ZERO] * (4 * n * n)
    for i, blk in enumerate(blocks_2x2):
        entries[i * 2 * n + i] = blk[0, 0]
        entries[i * 2 * n + n + i] = blk[0, 1]
        entries[(n + i) * 2 * n + i] = blk[1, 0]
        entries[(n + i) * 2 * n + n + i] = blk[1, 1]
    return Matrix(2 * n, 2 * n, entries)


def factor_block_diagonal(blocks: list[Matrix]) -> tuple[Matrix, InvolutionPair]:
    """Assemble a direct sum of determinant-one 2x2 blocks together with an
    involution pair factoring it.

    Block i of [[a, b], [c, d]] is embedded at positions A[i,i] = a,
    B[i,i] = b, C[i,i] = c, D[i,i] = d of the 2n x 2n block layout, and the
    per-block factorizations are assembled the same way.
    """
    if not blocks:
        raise DomainError("factor_block_diagonal needs at least one block")
    for i, blk in enumerate(blocks):
        if blk.shape != (2, 2):
            raise DimensionError(f"block {i} is not 2x2")
        if blk.det() != 1:
            raise DomainError(f"block {i} does not have determinant one")
    pairs = [factor_sl2(blk) for blk in blocks]
    phi = _interleave(blocks)
    pair = InvolutionPair(
        T=_interleave([p.T for p in pairs]),
        S=_interleave([p.S for p in pairs]),
    )
    if not pair.check() or pair.T @ pair.S != phi:
        raise InvariantViolation("block-diagonal factorization failed its identities")
    return phi, pair


def normalize_reversible(phi: Matrix, S: Matrix) -> tuple[Matrix, Matrix]:
    """Conjugate phi into the reversible symplectic class, given an
    anti-symplectic involution S with S phi S = phi^(-1).

    Returns (psi, phi_tilde) with psi = reversor_conjugator(S) and
    phi_tilde = psi phi psi^(-1); phi_tilde satisfies
    R phi_tilde R = phi_tilde^(-1) exactly.
    """
    require_symplectic(phi, "normalize_reversible")
    if not is_anti_symplectic_involution(S):
        raise DomainError("normalize_reversible requires an anti-symplectic involution")
    if not reverses(S, phi):
        raise DomainError("precondition failed: S @ phi @ S != phi^(-1)")
    psi = reversor_conjugator(S)
    phi_tilde = psi @ phi @ psi.inverse()
    if not is_reversible_symplectic(phi_tilde):
        raise InvariantViolation("normalized matrix failed R M R = M^(-1)")
    return psi, phi_tilde
