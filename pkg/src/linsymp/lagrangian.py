"""Lagrangian subspaces, splittings, and symplectic bases adapted to them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, DomainError, SingularMatrixError
from .matrix import Matrix, ONE, Rat, ZERO, vector
from .core import omega, omega_row, symplectic_form


class Subspace:
    """Column span of a rational matrix, stored canonically.

    The basis is kept in reduced column echelon form with first-nonzero
    pivot ordering, so two Subspaces are equal iff their spans are equal.
    """

    __slots__ = ("basis",)

    def __init__(self, spanning: Matrix):
        if spanning.rows == 0:
            raise DimensionError("ambient dimension must be positive")
        self.basis = spanning.rcef()

    @property
    def ambient_dim(self) -> int:
        return self.basis.rows

    @property
    def dimension(self) -> int:
        return self.basis.cols

    def contains(self, v: Sequence[Rat]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector has wrong ambient dimension")
        return self.basis.solve(list(v)) is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dimension} of R^{self.ambient_dim})"


@dataclass(frozen=True)
class SymplecticBasis:
    """Vectors v_1..v_n, w_1..w_n with omega(v_i, v_j) = omega(w_i, w_j) = 0
    and omega(v_i, w_j) = delta_ij."""

    v: tuple[tuple[Rat, ...], ...]
    w: tuple[tuple[Rat, ...], ...]

    def check(self) -> bool:
        n = len(self.v)
        if len(self.w) != n:
            return False
        for i in range(n):
            for j in range(n):
                if omega(self.v[i], self.v[j]) != 0:
                    return False
                if omega(self.w[i], self.w[j]) != 0:
                    return False
                if omega(self.v[i], self.w[j]) != (ONE if i == j else ZERO):
                    return False
        return True


def is_lagrangian(L: Subspace) -> bool:
    """True iff dim L = n and omega vanishes on L (exact Gram test)."""
    if L.ambient_dim % 2:
        raise DimensionError("ambient dimension must be even")
    n = L.ambient_dim // 2
    if L.dimension != n:
        return False
    F = L.basis
    return (F.T @ symplectic_form(n) @ F).is_zero()


def _splitting_matrix(L1: Subspace, L2: Subspace, context: str) -> Matrix:
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    B = L1.basis.hstack(L2.basis)
    if B.rows != B.cols:
        raise DomainError(f"{context}: subspace dimensions do not sum to the ambient one")
    try:
        return B.inverse()
    except SingularMatrixError:
        raise DomainError(f"{context}: subspaces are not complementary") from None


def project_along(L1: Subspace, L2: Subspace, v: Sequence) -> tuple[tuple[Rat, ...], tuple[Rat, ...]]:
    """Split v = p1 + p2 with p1 in L1 and p2 in L2.

    Solves the full-rank system in the concatenated basis, so it requires
    L1 and L2 to be complementary.
    """
    vv = vector(v)
    if len(vv) != L1.ambient_dim:
        raise DimensionError("vector has wrong ambient dimension")
    Binv = _splitting_matrix(L1, L2, "project_along")
    coords = Binv.mul_vec(vv)
    k = L1.dimension
    p1 = L1.basis.mul_vec(coords[:k])
    p2 = L2.basis.mul_vec(coords[k:])
    return p1, p2


def symplectic_basis_from_splitting(L1: Subspace, L2: Subspace) -> SymplecticBasis:
    """Build a symplectic basis adapted to a Lagrangian splitting L1 (+) L2.

    Inductive construction.  At step k+1:

    * v_(k+1) is the first canonical basis vector of the subspace of L1
      killed by omega(. , w_i) for all i <= k (nonempty by a dimension
      count);
    * a helper vector is the first-pivot solution of the linear system
      omega(v_i, x) = delta_(i, k+1) for i = 1..k+1 -- all k+1 conditions
      are imposed, not just the last one, otherwise the cross terms
      omega(v_i, w_(k+1)) with i <= k need not vanish;
    * w_(k+1) is its projection to L2 along L1, which preserves every
      omega(v_i, .) value because L1 is Lagrangian.

    All choices are first-pivot deterministic, so the output is a
    reproducible function of the input splitting; the contract is the
    SymplecticBasis invariant, which holds exactly.
    """
    if not is_lagrangian(L1) or not is_lagrangian(L2):
        raise DomainError("symplectic_basis_from_splitting needs Lagrangian subspaces")
    Binv = _splitting_matrix(L1, L2, "symplectic_basis_from_splitting")
    n = L1.dimension
    F = L1.basis
    two_n = 2 * n

    vs: list[tuple[Rat, ...]] = []
    ws: list[tuple[Rat, ...]] = []
    for _ in range(n):
        if ws:
            # Coefficient space of L1 cut down by the conditions omega(., w_i) = 0.
            cond = Matrix.from_rows([F.T.mul_vec(omega_row(w)) for w in ws])
            t_basis = cond.kernel()
            candidates = Subspace(F @ t_basis)
            v = candidates.basis.col(0)
        else:
            v = F.col(0)
        system = Matrix.from_rows([omega_row(u) for u in vs] + [omega_row(v)])
        rhs = [ZERO] * len(vs) + [ONE]
        helper = system.solve(rhs)
        if helper is None:  # omega is nondegenerate, so this cannot happen
            raise DomainError("degenerate pairing while extending the basis")
        coords = Binv.mul_vec(helper)
        w = L2.basis.mul_vec(coords[n:])
        vs.append(tuple(v))
        ws.append(tuple(w))
    return SymplecticBasis(tuple(vs), tuple(ws))


def basis_matrix(b: SymplecticBasis) -> Matrix:
    """The matrix with columns v_1..v_n, w_1..w_n; symplectic by construction."""
    if not b.check():
        raise DomainError("input does not satisfy the symplectic basis invariants")
    return Matrix.from_cols([list(u) for u in b.v] + [list(u) for u in b.w])
