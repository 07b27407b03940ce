"""Seeded, deterministic generators for symplectic matrices, involutions,
Lagrangian subspaces, and symmetric unitaries.

Randomness comes from SplitMix64 (Vigna's splitmix64.c), chosen because it
is a fixed, portable, splittable 64-bit algorithm with published reference
outputs; the integer-only rational samplers are therefore bit-identical
across platforms and Python versions.  Every sampler is a pure function of
its SampleConfig.

Exact symplectic matrices cannot be sampled by rejection (the group has
measure zero in matrix space), so sample_symplectic draws words in exact
generators: symmetric shears, embedded unimodular matrices, and the
standard form matrix itself.  Coverage of the full group is not claimed
and is not needed for property testing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .matrix import Matrix, ONE, ZERO, rat
from .core import embed_gl, reversor_times, symplectic_form
from .lagrangian import Subspace

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Reference SplitMix64 stream; next_u64 matches the published vectors."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        return _mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); modulo bias is irrelevant at
        the tiny bounds used here and keeps the stream consumption fixed."""
        return self.next_u64() % bound

    def int_between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def unit_float(self) -> float:
        # 53 uniform bits in [0, 1).
        return (self.next_u64() >> 11) * 2.0**-53

    def gauss_pair(self) -> tuple[float, float]:
        u1 = 1.0 - self.unit_float()  # (0, 1], keeps log finite
        u2 = self.unit_float()
        r = math.sqrt(-2.0 * math.log(u1))
        return r * math.cos(2.0 * math.pi * u2), r * math.sin(2.0 * math.pi * u2)


def _fnv1a(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = (h ^ byte) * 0x100000001B3 & _MASK64
    return h


def derive_seed(master: int, *parts) -> int:
    """Deterministically derive a child seed from a master seed and labels.

    Labels may be ints or strings; strings are hashed with FNV-1a so the
    derivation is stable across platforms (unlike built-in hash()).
    """
    h = master & _MASK64
    for part in parts:
        if isinstance(part, str):
            part = _fnv1a(part.encode("utf-8"))
        h = _mix64((h ^ (part & _MASK64)) + _GOLDEN & _MASK64)
    return h


@dataclass(frozen=True)
class SampleConfig:
    """Parameters of one deterministic draw."""

    n: int
    seed: int
    word_length: int = 6
    entry_bound: int = 3

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("half-dimension n must be >= 1")
        if self.word_length < 1:
            raise DomainError("word_length must be >= 1")
        if self.entry_bound < 1:
            raise DomainError("entry_bound must be >= 1")


def _symmetric_int(n: int, bound: int, rng: SplitMix64) -> Matrix:
    entries = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = rat(rng.int_between(-bound, bound))
            entries[i][j] = x
            entries[j][i] = x
    return Matrix.from_rows(entries)


def _unimodular(n: int, length: int, bound: int, rng: SplitMix64) -> Matrix:
    """Product of integer elementary shears; the identity when n = 1."""
    A = Matrix.identity(n)
    if n == 1:
        return A
    for _ in range(length):
        i = rng.below(n)
        j = rng.below(n - 1)
        if j >= i:
            j += 1
        c = rng.int_between(-bound, bound)
        shear = [[ONE if r == s else ZERO for s in range(n)] for r in range(n)]
        shear[i][j] = rat(c)
        A = A @ Matrix.from_rows(shear)
    return A


# Generator kinds for sample_symplectic, in stream order.
_UPPER_SHEAR, _LOWER_SHEAR, _GL_EMBED, _FORM = range(4)


def _generator(kind: int, cfg: SampleConfig, rng: SplitMix64) -> Matrix:
    n = cfg.n
    if kind == _UPPER_SHEAR:
        B = _symmetric_int(n, cfg.entry_bound, rng)
        one, zero = Matrix.identity(n), Matrix.zeros(n, n)
        return Matrix.from_blocks([[one, B], [zero, one]])
    if kind == _LOWER_SHEAR:
        C = _symmetric_int(n, cfg.entry_bound, rng)
        one, zero = Matrix.identity(n), Matrix.zeros(n, n)
        return Matrix.from_blocks([[one, zero], [C, one]])
    if kind == _GL_EMBED:
        return embed_gl(_unimodular(n, cfg.word_length, cfg.entry_bound, rng))
    if kind == _FORM:
        return symplectic_form(n)
    raise ValueError(f"unknown generator kind {kind}")


# Samplers are pure functions of their config and their values are immutable,
# so memoizing them is observationally transparent; the determinism property
# in the verify module deliberately tests the uncached implementations.


@lru_cache(maxsize=16384)
def sample_symplectic(cfg: SampleConfig) -> Matrix:
    """Product of word_length random exact generators; always symplectic."""
    rng = SplitMix64(cfg.seed)
    out = Matrix.identity(2 * cfg.n)
    for _ in range(cfg.word_length):
        out = out @ _generator(rng.below(4), cfg, rng)
    return out


@lru_cache(maxsize=16384)
def sample_anti_symplectic_involution(cfg: SampleConfig) -> Matrix:
    """psi^(-1) R psi for a sampled symplectic psi."""
    psi = sample_symplectic(cfg)
    return psi.inverse() @ reversor_times(psi)


@lru_cache(maxsize=16384)
def sample_reversible(cfg: SampleConfig) -> Matrix:
    """R S for a sampled anti-symplectic involution S."""
    return reversor_times(sample_anti_symplectic_involution(cfg))


@lru_cache(maxsize=16384)
def sample_lagrangian(cfg: SampleConfig) -> Subspace:
    """Image of the span of e_1..e_n under a sampled symplectic map."""
    psi = sample_symplectic(cfg)
    return Subspace(psi.block(0, 2 * cfg.n, 0, cfg.n))


@lru_cache(maxsize=16384)
def sample_invertible(cfg: SampleConfig) -> Matrix:
    """Invertible rational n x n matrix: shears around a rational diagonal."""
    rng = SplitMix64(cfg.seed)
    n, bound = cfg.n, cfg.entry_bound
    left = _unimodular(n, cfg.word_length, bound, rng)
    diag = []
    for _ in range(n):
        num = rng.int_between(1, bound) * (-1 if rng.below(2) else 1)
        den = rng.int_between(1, bound)
        diag.append(rat(num) / rat(den))
    right = _unimodular(n, cfg.word_length, bound, rng)
    return left @ Matrix.diagonal(diag) @ right


def sample_symmetric_unitary(cfg: SampleConfig) -> np.ndarray:
    """U U^T for U drawn by QR-orthonormalizing a seeded complex Gaussian.

    Exactly symmetric (symmetrized to the last bit); unitary to rounding
    error.  Reproducibility is at floating-point accuracy, not bit-level:
    the rational samplers are the bit-exact ones.
    """
    rng = SplitMix64(cfg.seed)
    n = cfg.n
    g = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            re, im = rng.gauss_pair()
            g[i, j] = complex(re, im)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    u = q * (d.conj() / np.abs(d))
    theta = u @ u.T
    return (theta + theta.T) / 2.0
