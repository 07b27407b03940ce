"""Charts on anti-symplectic involutions over the Lagrangian Grassmannian,
plus the floating-point bridge to symmetric unitary matrices.

Chart convention.  For an involution S with fixed subspace L (canonical
basis F), the matrix G = Omega F spans the Euclidean orthocomplement of L;
this realization is rational whenever L is.  The -1 eigenspace is the graph
over that complement of a unique map into L, i.e. the span of G + F M for a
unique n x n matrix M, and the chart coordinate is A = (F^T F) M.  With this
normalization A is symmetric precisely because the -1 eigenspace is
Lagrangian, so the chart lands exactly on the symmetric matrices.

Complex structure convention: i acts on (x, y) as (-y, x), i.e. as -Omega.
Under this identification an orthogonal anti-symplectic involution is a
conjugate-linear map v -> theta conj(v) with theta symmetric unitary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, InvariantViolation
from .matrix import Matrix
from .core import form_times, identity, is_anti_symplectic_involution, times_reversor
from .involutions import eigenspace_split
from .lagrangian import Subspace, is_lagrangian

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ChartPoint:
    """A Lagrangian subspace together with a symmetric coordinate matrix."""

    base: Subspace
    coordinate: Matrix


def fixed_subspace(S: Matrix) -> Subspace:
    """The +1 eigenspace of an anti-symplectic involution; always Lagrangian."""
    return eigenspace_split(S).plus


def chart_coordinates(S: Matrix) -> ChartPoint:
    """Chart an involution as (fixed subspace, symmetric coordinate matrix)."""
    split = eigenspace_split(S)
    F = split.plus.basis
    n = F.cols
    G = form_times(F)
    # Write each column of G as (minus-eigenspace vector) - F m_j.
    X = split.minus.basis.hstack(F).inverse() @ G
    M = -X.block(n, 2 * n, 0, n)
    A = (F.T @ F) @ M
    if not A.is_symmetric():
        raise InvariantViolation("chart coordinate of an involution must be symmetric")
    return ChartPoint(base=split.plus, coordinate=A)


def involution_from_chart(point: ChartPoint) -> Matrix:
    """Rebuild the involution fixing the base with -1 eigenspace given by the
    chart coordinate; exact inverse of chart_coordinates."""
    base, A = point.base, point.coordinate
    if not is_lagrangian(base):
        raise DomainError("chart base must be Lagrangian")
    n = base.dimension
    if A.shape != (n, n):
        raise DimensionError(f"coordinate must be {n}x{n}, got {A.rows}x{A.cols}")
    if not A.is_symmetric():
        raise DomainError("chart coordinate must be symmetric")
    F = base.basis
    M = (F.T @ F).inverse() @ A
    W = form_times(F) + F @ M
    # S acts as +1 on the columns of F and -1 on the columns of W.
    B = F.hstack(W)
    S = times_reversor(B) @ B.inverse()
    if not is_anti_symplectic_involution(S):
        raise InvariantViolation("reconstructed chart matrix is not an involution")
    return S


def _as_float(S: Matrix) -> np.ndarray:
    return np.array([[float(S[i, j]) for j in range(S.cols)] for i in range(S.rows)])


def _float_form(n: int) -> np.ndarray:
    Om = np.zeros((2 * n, 2 * n))
    Om[:n, n:] = np.eye(n)
    Om[n:, :n] = -np.eye(n)
    return Om


def _max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def to_symmetric_unitary(S, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Pack an orthogonal anti-symplectic involution into its symmetric
    unitary matrix: column j is the top half of S e_j plus i times the
    bottom half.

    Accepts an exact rational matrix (preconditions checked exactly) or a
    real floating-point array (preconditions checked within tol).
    """
    if isinstance(S, Matrix):
        if not is_anti_symplectic_involution(S):
            raise DomainError("to_symmetric_unitary requires an anti-symplectic involution")
        if S.T @ S != identity(S.rows):
            raise DomainError("to_symmetric_unitary requires an orthogonal matrix")
        real = _as_float(S)
    else:
        real = np.asarray(S, dtype=float)
        if real.ndim != 2 or real.shape[0] != real.shape[1] or real.shape[0] % 2:
            raise DimensionError("expected a square 2n x 2n array")
        n = real.shape[0] // 2
        checks = {
            "orthogonality |S^T S - I|": _max_abs(real.T @ real - np.eye(2 * n)),
            "involution |S^2 - I|": _max_abs(real @ real - np.eye(2 * n)),
            "anti-symplectic |S^T Om S + Om|": _max_abs(
                real.T @ _float_form(n) @ real + _float_form(n)
            ),
        }
        for name, err in checks.items():
            if err > tol:
                raise DomainError(f"{name} = {err:.3e} exceeds tolerance {tol:.3e}")
    n = real.shape[0] // 2
    return real[:n, :n] + 1j * real[n:, :n]


def from_symmetric_unitary(theta: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real 2n x 2n matrix of the conjugate-linear map v -> theta conj(v).

    The result is [[Re theta, Im theta], [Im theta, -Re theta]]; it is
    orthogonal, anti-symplectic, and an involution within tol whenever
    theta is symmetric and unitary within tol.
    """
    theta = np.asarray(theta, dtype=complex)
    if theta.ndim != 2 or theta.shape[0] != theta.shape[1]:
        raise DimensionError("expected a square complex matrix")
    n = theta.shape[0]
    unitary_err = _max_abs(theta @ theta.conj().T - np.eye(n))
    if unitary_err > tol:
        raise DomainError(f"unitarity |theta theta* - I| = {unitary_err:.3e} exceeds tolerance {tol:.3e}")
    symmetry_err = _max_abs(theta - theta.T)
    if symmetry_err > tol:
        raise DomainError(f"symmetry |theta - theta^T| = {symmetry_err:.3e} exceeds tolerance {tol:.3e}")
    re, im = theta.real, theta.imag
    return np.block([[re, im], [im, -re]])
