"""Dense exact-rational matrices and the elimination routines built on them.

Scalars are arbitrary-precision rationals (``gmpy2.mpq``), so every
comparison in this module is exact; there is no floating point anywhere.
Matrices are immutable after construction and safe to share across threads.
Pivot selection in all elimination routines is first-nonzero, which makes
every canonical form and every solver deterministic.
"""

from __future__ import annotations

from operator import mul as _mul
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import DimensionError, SingularMatrixError

Rat = mpq

ZERO = mpq(0)
ONE = mpq(1)


def rat(value) -> Rat:
    """Coerce an int, rational number, or literal like "5" / "-3/4" to mpq.

    String literals may be non-canonical ("6/4", "3/-4"); the result is
    always in lowest terms with a positive denominator.  A zero denominator
    raises ValueError.
    """
    if isinstance(value, mpq):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, str):
        num, sep, den = value.strip().partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in rational literal: {value!r}")
        return mpq(p, q)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rat_str(value: Rat) -> str:
    """Canonical text form: "k" for integers, "p/q" in lowest terms otherwise."""
    return str(value)


def vector(values: Iterable) -> tuple[Rat, ...]:
    """Coerce a sequence of entries to an exact rational vector."""
    return tuple(rat(x) for x in values)


def _new(rows: int, cols: int, entries: list) -> "Matrix":
    # Internal constructor: adopts an already-coerced flat entry list.
    m = Matrix.__new__(Matrix)
    m.rows = rows
    m.cols = cols
    m._e = tuple(entries)
    return m


class Matrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        flat = [rat(x) for x in entries]
        if rows < 0 or cols < 0 or len(flat) != rows * cols:
            raise DimensionError(
                f"entry count {len(flat)} does not fill a {rows}x{cols} matrix"
            )
        self.rows = rows
        self.cols = cols
        self._e = tuple(flat)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged row lengths")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Matrix":
        ncols = len(cols)
        nrows = len(cols[0]) if ncols else 0
        if any(len(c) != nrows for c in cols):
            raise DimensionError("ragged column lengths")
        return cls(nrows, ncols, [cols[j][i] for i in range(nrows) for j in range(ncols)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return _new(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return _new(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        vals = [rat(x) for x in values]
        n = len(vals)
        return _new(n, n, [vals[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_blocks(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a 2-d grid of conforming blocks."""
        row_heights = [row[0].rows for row in grid]
        col_widths = [blk.cols for blk in grid[0]]
        for row in grid:
            if len(row) != len(col_widths):
                raise DimensionError("ragged block grid")
            for blk, h, w in zip(row, [row[0].rows] * len(row), col_widths):
                if blk.rows != h or blk.cols != w:
                    raise DimensionError("non-conforming blocks")
        entries: list = []
        for row in grid:
            for i in range(row[0].rows):
                for blk in row:
                    entries.extend(blk._e[i * blk.cols : (i + 1) * blk.cols])
        return _new(sum(row_heights), sum(col_widths), entries)

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Rat:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple[Rat, ...]:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Rat, ...]:
        return self._e[j :: self.cols] if self.cols else ()

    def columns(self) -> list[tuple[Rat, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Submatrix of rows [r0, r1) and columns [c0, c1)."""
        entries = []
        for i in range(r0, r1):
            entries.extend(self._e[i * self.cols + c0 : i * self.cols + c1])
        return _new(r1 - r0, c1 - c0, entries)

    def to_lists(self) -> list[list[Rat]]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- structural predicates ----------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._e)

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        n = self.cols
        e = self._e
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._e))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "add")
        return _new(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other, "subtract")
        return _new(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return _new(self.rows, self.cols, [-a for a in self._e])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self._matmul(other)
        return _new(self.rows, self.cols, [a * rat(other) for a in self._e])

    def __rmul__(self, other):
        return _new(self.rows, self.cols, [rat(other) * a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self._matmul(other)

    def _matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, m, p = self.rows, self.cols, other.cols
        a, b = self._e, other._e
        bcols = [b[j::p] for j in range(p)] if p else []
        out = []
        for i in range(n):
            ai = a[i * m : (i + 1) * m]
            for bj in bcols:
                out.append(sum(map(_mul, ai, bj), ZERO))
        return _new(n, p, out)

    def mul_vec(self, v: Sequence[Rat]) -> tuple[Rat, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector length {len(v)} != column count {self.cols}")
        e, c = self._e, self.cols
        return tuple(sum(map(_mul, e[i * c : (i + 1) * c], v), ZERO) for i in range(self.rows))

    def transpose(self) -> "Matrix":
        r, c, e = self.rows, self.cols, self._e
        return _new(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        entries = []
        for i in range(self.rows):
            entries.extend(self.row(i))
            entries.extend(other.row(i))
        return _new(self.rows, self.cols + other.cols, entries)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return _new(self.rows + other.rows, self.cols, list(self._e) + list(other._e))

    def trace(self) -> Rat:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self._e[i * self.cols + i] for i in range(self.rows)), ZERO)

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form; returns (reduced matrix, pivot columns)."""
        m, n = self.rows, self.cols
        a = [list(self._e[i * n : (i + 1) * n]) for i in range(m)]
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            pr = next((i for i in range(r, m) if a[i][c] != 0), None)
            if pr is None:
                continue
            if pr != r:
                a[r], a[pr] = a[pr], a[r]
            pv = a[r][c]
            if pv != 1:
                inv = ONE / pv
                a[r] = [x * inv for x in a[r]]
            row_r = a[r]
            for i in range(m):
                f = a[i][c]
                if i != r and f != 0:
                    a[i] = [x - f * y for x, y in zip(a[i], row_r)]
            pivots.append(c)
            r += 1
        return _new(m, n, [x for row in a for x in row]), tuple(pivots)

    def rcef(self) -> "Matrix":
        """Reduced column echelon form with zero columns dropped.

        This is the canonical basis of the column span: equal spans yield
        identical matrices.
        """
        reduced, pivots = self.transpose().rref()
        return reduced.block(0, len(pivots), 0, reduced.cols).transpose()

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "Matrix":
        """Canonical basis of the right null space, one column per basis vector."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        cols = []
        for f in free:
            x = [ZERO] * self.cols
            x[f] = ONE
            for r_idx, p in enumerate(pivots):
                x[p] = -reduced[r_idx, f]
            cols.append(x)
        if not cols:
            return _new(self.cols, 0, [])
        return Matrix.from_cols(cols).rcef()

    def solve(self, b: Sequence[Rat]) -> tuple[Rat, ...] | None:
        """First-pivot particular solution of self @ x = b with free variables
        set to zero, or None if the system is inconsistent."""
        if len(b) != self.rows:
            raise DimensionError(f"rhs length {len(b)} != row count {self.rows}")
        aug = self.hstack(Matrix.from_cols([list(b)]))
        reduced, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r_idx, p in enumerate(pivots):
            x[p] = reduced[r_idx, self.cols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination, first-nonzero pivots."""
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        a = [list(self._e[i * n : (i + 1) * n]) for i in range(n)]
        b = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for c in range(n):
            pr = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pr is None:
                raise SingularMatrixError("matrix is singular")
            if pr != c:
                a[c], a[pr] = a[pr], a[c]
                b[c], b[pr] = b[pr], b[c]
            pv = a[c][c]
            if pv != 1:
                inv = ONE / pv
                a[c] = [x * inv for x in a[c]]
                b[c] = [x * inv for x in b[c]]
            row_a, row_b = a[c], b[c]
            for i in range(n):
                f = a[i][c]
                if i != c and f != 0:
                    a[i] = [x - f * y for x, y in zip(a[i], row_a)]
                    b[i] = [x - f * y for x, y in zip(b[i], row_b)]
        return _new(n, n, [x for row in b for x in row])

    def det(self) -> Rat:
        """Exact determinant via Gaussian elimination."""
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = [list(self._e[i * n : (i + 1) * n]) for i in range(n)]
        sign = ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pr is None:
                return ZERO
            if pr != c:
                a[c], a[pr] = a[pr], a[c]
                sign = -sign
            pv = a[c][c]
            for i in range(c + 1, n):
                f = a[i][c]
                if f != 0:
                    f = f / pv
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        result = sign
        for c in range(n):
            result = result * a[c][c]
        return result

    # -- misc ----------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix", verb: str) -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"cannot {verb} Matrix and {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionError(f"cannot {verb} {self.shape} and {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"
