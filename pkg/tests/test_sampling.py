"""Seeded generators: reference vectors, membership, determinism, goldens."""

import numpy as np
import pytest

from linsymp.errors import DomainError
from linsymp.jsonio import matrix_to_json, subspace_to_json
from linsymp.core import is_anti_symplectic_involution, is_reversible_symplectic, is_symplectic
from linsymp.lagrangian import is_lagrangian
from linsymp.sampling import (
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


def test_splitmix64_reference_vectors():
    # Published outputs of splitmix64 for seed 0.
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_splitmix64_helpers():
    rng = SplitMix64(123)
    values = [rng.int_between(-3, 3) for _ in range(200)]
    assert all(-3 <= v <= 3 for v in values)
    assert len(set(values)) == 7
    rng = SplitMix64(5)
    floats = [rng.unit_float() for _ in range(100)]
    assert all(0.0 <= f < 1.0 for f in floats)


def test_derive_seed_stable():
    assert derive_seed(7, "alpha", 1, 2) == derive_seed(7, "alpha", 1, 2)
    assert derive_seed(7, "alpha", 1, 2) != derive_seed(7, "alpha", 1, 3)
    assert derive_seed(7, "alpha") != derive_seed(7, "beta")


def test_config_validation():
    with pytest.raises(DomainError):
        SampleConfig(n=0, seed=1)
    with pytest.raises(DomainError):
        SampleConfig(n=1, seed=1, word_length=0)
    with pytest.raises(DomainError):
        SampleConfig(n=1, seed=1, entry_bound=0)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("seed", [0, 1, 42, 2**63])
def test_sampler_memberships(n, seed):
    cfg = SampleConfig(n=n, seed=seed)
    assert is_symplectic(sample_symplectic(cfg)).verdict
    assert is_anti_symplectic_involution(sample_anti_symplectic_involution(cfg))
    assert is_reversible_symplectic(sample_reversible(cfg))
    assert is_lagrangian(sample_lagrangian(cfg))
    assert sample_invertible(cfg).det() != 0
    theta = sample_symmetric_unitary(cfg)
    assert np.array_equal(theta, theta.T)
    assert np.max(np.abs(theta @ theta.conj().T - np.eye(n))) < 1e-12


def test_sampler_determinism_unwrapped():
    cfg = SampleConfig(n=2, seed=99)
    for sampler in (
        sample_symplectic,
        sample_anti_symplectic_involution,
        sample_reversible,
        sample_lagrangian,
        sample_invertible,
    ):
        assert sampler.__wrapped__(cfg) == sampler.__wrapped__(cfg)
    assert np.array_equal(
        sample_symmetric_unitary(SampleConfig(n=3, seed=4)),
        sample_symmetric_unitary(SampleConfig(n=3, seed=4)),
    )


def test_seed_changes_output():
    a = sample_symplectic(SampleConfig(n=2, seed=1))
    b = sample_symplectic(SampleConfig(n=2, seed=2))
    assert a != b


def test_golden_outputs_seed42():
    # Frozen at first implementation; pins the generator word stream across
    # platforms and versions.
    cfg = SampleConfig(n=1, seed=42)
    assert matrix_to_json(sample_symplectic(cfg)) == {
        "rows": 2,
        "cols": 2,
        "data": [["16", "3"], ["37", "7"]],
    }
    assert matrix_to_json(sample_anti_symplectic_involution(cfg)) == {
        "rows": 2,
        "cols": 2,
        "data": [["223", "42"], ["-1184", "-223"]],
    }
    assert matrix_to_json(sample_reversible(cfg)) == {
        "rows": 2,
        "cols": 2,
        "data": [["223", "42"], ["1184", "223"]],
    }
    assert subspace_to_json(sample_lagrangian(cfg)) == {
        "rows": 2,
        "cols": 1,
        "data": [["1"], ["37/16"]],
    }
    assert matrix_to_json(sample_symplectic(SampleConfig(n=2, seed=7))) == {
        "rows": 4,
        "cols": 4,
        "data": [
            ["4", "0", "5", "-5"],
            ["-7", "-3", "-5", "6"],
            ["13", "2", "14", "-15"],
            ["16", "8", "10", "-13"],
        ],
    }


def test_golden_theta_within_float_accuracy():
    theta = sample_symmetric_unitary(SampleConfig(n=2, seed=5))
    expected = np.array(
        [
            [-0.768974229285 - 0.311134228256j, 0.556695848851 - 0.044315443986j],
            [0.556695848851 - 0.044315443986j, 0.710066440134 - 0.428872386488j],
        ]
    )
    assert np.max(np.abs(theta - expected)) < 1e-9
