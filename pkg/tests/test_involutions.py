"""Maps between reversible symplectic matrices, involutions, and cosets."""

import pytest

from linsymp.errors import DomainError
from linsymp.matrix import Matrix
from linsymp.core import embed_gl, is_anti_symplectic_involution, is_reversible_symplectic, standard_reversor, symplectic_form
from linsymp.involutions import (
    conjugated_reversor,
    coset_witness,
    eigenspace_split,
    involution_to_reversible,
    reversible_to_involution,
    reversor_conjugator,
)
from linsymp.lagrangian import Subspace

SWAP = Matrix.from_rows([[0, 1], [1, 0]])


def span(*cols):
    return Subspace(Matrix.from_cols([list(c) for c in cols]))


def test_reversible_to_involution():
    assert reversible_to_involution(Matrix.identity(2)) == standard_reversor(1)
    rotation = Matrix.from_rows([["3/5", "-4/5"], ["4/5", "3/5"]])
    image = reversible_to_involution(rotation)
    assert image == Matrix.from_rows([["3/5", "-4/5"], ["-4/5", "-3/5"]])
    assert is_anti_symplectic_involution(image)
    with pytest.raises(DomainError):
        reversible_to_involution(Matrix.diagonal([2, "1/2"]))


def test_involution_to_reversible():
    assert involution_to_reversible(standard_reversor(1)) == Matrix.identity(2)
    image = involution_to_reversible(SWAP)
    assert image == symplectic_form(1)
    assert is_reversible_symplectic(image)
    with pytest.raises(DomainError):
        involution_to_reversible(Matrix.identity(2))


def test_round_trips():
    for psi in (Matrix.identity(2), symplectic_form(1), Matrix.from_rows([[1, 5], [0, 1]])):
        assert involution_to_reversible(reversible_to_involution(psi)) == psi
    for S in (standard_reversor(1), SWAP, Matrix.from_rows([[1, 2], [0, -1]])):
        assert reversible_to_involution(involution_to_reversible(S)) == S


def test_conjugated_reversor():
    assert conjugated_reversor(Matrix.identity(4)) == standard_reversor(2)
    for A in (Matrix.from_rows([[3]]), Matrix.from_rows([[1, 2], [1, 3]])):
        assert conjugated_reversor(embed_gl(A)) == standard_reversor(A.rows)
    psi = Matrix.from_rows([[1, "-1/2"], [1, "1/2"]]).inverse()
    assert conjugated_reversor(psi) == SWAP


def test_eigenspace_split():
    split = eigenspace_split(standard_reversor(2))
    assert split.plus == span([1, 0, 0, 0], [0, 1, 0, 0])
    assert split.minus == span([0, 0, 1, 0], [0, 0, 0, 1])
    split = eigenspace_split(SWAP)
    assert split.plus == span([1, 1]) and split.minus == span([1, -1])
    split = eigenspace_split(Matrix.from_rows([[1, 2], [0, -1]]))
    assert split.plus == span([1, 0]) and split.minus == span([-1, 1])
    with pytest.raises(DomainError):
        eigenspace_split(Matrix.identity(2))


def test_reversor_conjugator():
    assert reversor_conjugator(standard_reversor(2)) == Matrix.identity(4)
    psi = reversor_conjugator(SWAP)
    assert psi.inverse() == Matrix.from_rows([[1, "-1/2"], [1, "1/2"]])
    assert psi.inverse() @ standard_reversor(1) @ psi == SWAP


def test_coset_witness():
    psi = Matrix.from_rows([[1, 3], [0, 1]])
    assert coset_witness(psi, psi) == Matrix.identity(1)
    B = Matrix.from_rows([[1, 1], [2, 3]])
    psi2 = Matrix.from_rows([[1, 0, 0, 0], [2, 1, 0, 0], [0, 0, 1, -2], [0, 0, 0, 1]])
    assert coset_witness(embed_gl(B) @ psi2, psi2) == B
    # Involutions with different fixed loci come from different cosets.
    psi_a = reversor_conjugator(SWAP)
    psi_b = reversor_conjugator(Matrix.from_rows([[1, 2], [0, -1]]))
    assert coset_witness(psi_a, psi_b) is None
