"""JSON exchange formats for matrices, subspaces, and complex matrices.

Rational matrices travel as {"rows": r, "cols": c, "data": [[...], ...]}
with every entry a string, either an integer "k" or a fraction "p/q".
Non-canonical fractions are accepted on input ("6/4", "3/-4") but entries
are always emitted in lowest terms with a positive denominator; a zero
denominator is rejected.  Subspaces use the same envelope and mean the
column span.  Complex matrices carry [re, im] number pairs; plain float
matrices carry bare numbers.
"""

from __future__ import annotations

import json
import sys
from typing import Callable

import numpy as np

from .errors import FormatError
from .matrix import Matrix, rat, rat_str
from .lagrangian import Subspace


def _shape_from(obj, what: str) -> tuple[int, int, list]:
    if not isinstance(obj, dict):
        raise FormatError(f"{what}: expected a JSON object")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except (KeyError, TypeError):
        raise FormatError(f'{what}: needs keys "rows", "cols", "data"') from None
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise FormatError(f"{what}: rows and cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows:
        raise FormatError(f"{what}: data must be a list of {rows} rows")
    for r in data:
        if not isinstance(r, list) or len(r) != cols:
            raise FormatError(f"{what}: every data row must have {cols} entries")
    return rows, cols, data


def matrix_from_json(obj) -> Matrix:
    rows, cols, data = _shape_from(obj, "matrix")
    entries = []
    for r in data:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise FormatError(f"matrix entry {x!r} must be an integer or a rational string")
            try:
                entries.append(rat(x))
            except ValueError as exc:
                raise FormatError(str(exc)) from None
    return Matrix(rows, cols, entries)


def matrix_to_json(M: Matrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "data": [[rat_str(x) for x in M.row(i)] for i in range(M.rows)],
    }


def subspace_from_json(obj) -> Subspace:
    return Subspace(matrix_from_json(obj))


def subspace_to_json(S: Subspace) -> dict:
    return matrix_to_json(S.basis)


def complex_matrix_from_json(obj) -> np.ndarray:
    rows, cols, data = _shape_from(obj, "complex matrix")
    out = np.empty((rows, cols), dtype=complex)
    for i, r in enumerate(data):
        for j, x in enumerate(r):
            if (
                not isinstance(x, list)
                or len(x) != 2
                or not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in x)
            ):
                raise FormatError(f"complex entry {x!r} must be a [re, im] number pair")
            out[i, j] = complex(x[0], x[1])
    return out


def complex_matrix_to_json(theta: np.ndarray) -> dict:
    rows, cols = theta.shape
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[[float(theta[i, j].real), float(theta[i, j].imag)] for j in range(cols)] for i in range(rows)],
    }


def float_matrix_to_json(arr: np.ndarray) -> dict:
    rows, cols = arr.shape
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(arr[i, j]) for j in range(cols)] for i in range(rows)],
    }


def read_json(path: str):
    """Load a JSON document from a file path, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from None


def load(path: str, parser: Callable):
    return parser(read_json(path))
