"""Standard forms on R^(2n) and membership predicates for the symplectic family.

Conventions, fixed once for the whole package:

* the bilinear form is omega(v, w) = v^T Omega w with
  Omega = [[0, I], [-I, 0]] in (q_1..q_n, p_1..p_n) coordinate order;
* the standard reversor is R = diag(I, -I), i.e. (q, p) -> (q, -p).

With these choices R is an anti-symplectic involution (R^T Omega R = -Omega,
R^2 = 1) and every predicate below is decided by exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import DimensionError, NotSymplecticError, SingularMatrixError
from .matrix import Matrix, ONE, Rat, ZERO, rat_str


@lru_cache(maxsize=None)
def symplectic_form(n: int) -> Matrix:
    """Matrix Omega of the standard form on R^(2n): [[0, I], [-I, 0]]."""
    if n < 1:
        raise DimensionError("half-dimension must be >= 1")
    entries = [ZERO] * (4 * n * n)
    for i in range(n):
        entries[i * 2 * n + n + i] = ONE
        entries[(n + i) * 2 * n + i] = -ONE
    return Matrix(2 * n, 2 * n, entries)


@lru_cache(maxsize=None)
def standard_reversor(n: int) -> Matrix:
    """diag(I, -I): the involution (q, p) -> (q, -p)."""
    if n < 1:
        raise DimensionError("half-dimension must be >= 1")
    return Matrix.diagonal([ONE] * n + [-ONE] * n)


@lru_cache(maxsize=None)
def identity(n: int) -> Matrix:
    return Matrix.identity(n)


def _half_dim(M: Matrix) -> int:
    if not M.is_square:
        raise DimensionError(f"expected a square matrix, got {M.rows}x{M.cols}")
    if M.rows % 2 or M.rows == 0:
        raise DimensionError(f"expected even size 2n, got {M.rows}")
    return M.rows // 2


def omega(v: Sequence[Rat], w: Sequence[Rat]) -> Rat:
    """Evaluate the standard form: omega(v, w) = v^T Omega w.

    Expanded in coordinates this is sum_i v_i w_(n+i) - v_(n+i) w_i.
    """
    if len(v) != len(w):
        raise DimensionError(f"vector lengths differ: {len(v)} vs {len(w)}")
    if len(v) % 2 or len(v) == 0:
        raise DimensionError(f"vectors must have even length 2n, got {len(v)}")
    n = len(v) // 2
    s = ZERO
    for i in range(n):
        s = s + v[i] * w[n + i] - v[n + i] * w[i]
    return s


def omega_row(v: Sequence[Rat]) -> tuple[Rat, ...]:
    """The row vector v^T Omega, i.e. j -> omega(v, e_j)."""
    n = len(v) // 2
    return tuple(-v[n + j] for j in range(n)) + tuple(v[j] for j in range(n))


@dataclass(frozen=True)
class Violation:
    """One failed entry of a predicate: condition name, position, residual."""

    condition: str
    row: int
    col: int
    residual: Rat

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "row": self.row,
            "col": self.col,
            "residual": rat_str(self.residual),
        }


@dataclass(frozen=True)
class PredicateReport:
    """Outcome of an exact matrix predicate with per-entry diagnostics."""

    verdict: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "violations": [v.to_json() for v in self.violations],
        }


def _collect(condition: str, residual: Matrix) -> list[Violation]:
    out = []
    for i in range(residual.rows):
        for j in range(residual.cols):
            x = residual[i, j]
            if x != 0:
                out.append(Violation(condition, i, j, x))
    return out


def _report(pairs: list[tuple[str, Matrix]]) -> PredicateReport:
    violations: list[Violation] = []
    for condition, residual in pairs:
        violations.extend(_collect(condition, residual))
    return PredicateReport(not violations, tuple(violations))


def _even_rows(M: Matrix) -> int:
    if M.rows % 2 or M.rows == 0:
        raise DimensionError(f"expected an even row count 2n, got {M.rows}")
    return M.rows // 2


def form_times(M: Matrix) -> Matrix:
    """Omega @ M, exploiting the block sparsity of Omega."""
    n = _even_rows(M)
    return M.block(n, 2 * n, 0, M.cols).vstack(-M.block(0, n, 0, M.cols))


def reversor_times(M: Matrix) -> Matrix:
    """R @ M: negate the bottom half of the rows."""
    n = _even_rows(M)
    return M.block(0, n, 0, M.cols).vstack(-M.block(n, 2 * n, 0, M.cols))


def times_reversor(M: Matrix) -> Matrix:
    """M @ R: negate the right half of the columns."""
    if M.cols % 2 or M.cols == 0:
        raise DimensionError(f"expected even column count, got {M.cols}")
    n = M.cols // 2
    left = M.block(0, M.rows, 0, n)
    right = M.block(0, M.rows, n, 2 * n)
    return left.hstack(-right)


def reversor_conjugate(M: Matrix) -> Matrix:
    """R @ M @ R: negate the off-diagonal blocks."""
    A, B, C, D = blocks(M)
    return Matrix.from_blocks([[A, -B], [-C, D]])


def is_symplectic(M: Matrix) -> PredicateReport:
    """Exact test of M^T Omega M = Omega."""
    n = _half_dim(M)
    return _report([("MtOmegaM - Omega", M.T @ form_times(M) - symplectic_form(n))])


def is_anti_symplectic(M: Matrix) -> PredicateReport:
    """Exact test of M^T Omega M = -Omega."""
    n = _half_dim(M)
    return _report([("MtOmegaM + Omega", M.T @ form_times(M) + symplectic_form(n))])


def is_involution(M: Matrix) -> PredicateReport:
    """Exact test of M^2 = 1."""
    if not M.is_square:
        raise DimensionError(f"expected a square matrix, got {M.rows}x{M.cols}")
    return _report([("M^2 - I", M @ M - identity(M.rows))])


def blocks(M: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Split a 2n x 2n matrix into the n x n blocks (A, B, C, D)."""
    n = _half_dim(M)
    return (
        M.block(0, n, 0, n),
        M.block(0, n, n, 2 * n),
        M.block(n, 2 * n, 0, n),
        M.block(n, 2 * n, n, 2 * n),
    )


def symplectic_block_report(M: Matrix) -> PredicateReport:
    """Blockwise symplectic conditions: A^T D - C^T B = 1, A^T C and B^T D symmetric.

    Equivalent to is_symplectic; the verdicts always agree.  Beware that
    moving a transpose (e.g. A D^T - C^T B = 1) yields a strictly weaker
    triple, so the transpose placement here is load-bearing.
    """
    A, B, C, D = blocks(M)
    n = A.rows
    atc = A.T @ C
    btd = B.T @ D
    return _report(
        [
            ("AtD - CtB - I", A.T @ D - C.T @ B - identity(n)),
            ("AtC symmetry", atc - atc.T),
            ("BtD symmetry", btd - btd.T),
        ]
    )


def is_anti_symplectic_involution(M: Matrix) -> bool:
    """Membership in the anti-symplectic involutions: M^2 = 1 and M^T Omega M = -Omega."""
    return bool(is_anti_symplectic(M)) and bool(is_involution(M))


def require_symplectic(M: Matrix, context: str = "operation") -> None:
    if not is_symplectic(M):
        raise NotSymplecticError(f"{context} requires a symplectic matrix")


def is_reversible_symplectic(M: Matrix) -> bool:
    """Membership in the reversible symplectic maps: R M R = M^(-1).

    These are exactly the symplectic maps conjugated to their inverse by
    the standard reversor.  Raises NotSymplecticError on non-symplectic
    input, which is a precondition failure rather than a False verdict.
    """
    require_symplectic(M, "reversibility test")
    return reversor_conjugate(M) == M.inverse()


def embed_gl(A: Matrix) -> Matrix:
    """Embed an invertible n x n matrix as diag(A, (A^T)^(-1)).

    The image is the subgroup of symplectic matrices commuting with the
    standard reversor.
    """
    if not A.is_square:
        raise DimensionError("embed_gl needs a square matrix")
    try:
        lower = A.T.inverse()
    except SingularMatrixError:
        raise SingularMatrixError("embed_gl needs an invertible matrix") from None
    n = A.rows
    Z = Matrix.zeros(n, n)
    return Matrix.from_blocks([[A, Z], [Z, lower]])


def commutes_with_reversor(M: Matrix) -> bool:
    """True iff R M = M R, for symplectic M.

    Commuting with diag(I, -I) is the same as having zero off-diagonal
    blocks, so no multiplication is needed.
    """
    require_symplectic(M, "reversor-commutation test")
    _, B, C, _ = blocks(M)
    return B.is_zero() and C.is_zero()


def gl_witness(M: Matrix) -> Matrix | None:
    """Recover A with M = embed_gl(A), or None when M is not of that form.

    Left inverse of embed_gl: gl_witness(embed_gl(A)) == A.
    """
    if not commutes_with_reversor(M):
        return None
    n = M.rows // 2
    return M.block(0, n, 0, n)
