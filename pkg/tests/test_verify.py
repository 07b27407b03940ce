"""The property-suite runner."""

import pytest

from linsymp.errors import DomainError
from linsymp.verify import PROPERTIES, run_all


def test_all_properties_pass_smoke():
    summary = run_all(n_max=2, trials=3, seed=11)
    assert summary["all_passed"] is True
    assert set(summary["properties"]) == set(PROPERTIES)
    for entry in summary["properties"].values():
        assert entry["passed"] == 6 and entry["failed"] == 0


def test_runner_deterministic():
    assert run_all(n_max=1, trials=2, seed=3) == run_all(n_max=1, trials=2, seed=3)


def test_runner_validates_args():
    with pytest.raises(DomainError):
        run_all(n_max=0, trials=1, seed=0)
    with pytest.raises(DomainError):
        run_all(n_max=1, trials=0, seed=0)


def test_failures_are_reported_not_raised():
    # A property that raises must be recorded as a failure with evidence.
    broken = dict(PROPERTIES)

    def explodes(n, seed):
        raise RuntimeError("boom")

    broken["zz.explodes"] = explodes
    import linsymp.verify as verify_module

    original = verify_module.PROPERTIES
    verify_module.PROPERTIES = broken
    try:
        summary = run_all(n_max=1, trials=2, seed=0)
    finally:
        verify_module.PROPERTIES = original
    assert summary["all_passed"] is False
    entry = summary["properties"]["zz.explodes"]
    assert entry["failed"] == 2
    assert "RuntimeError" in entry["first_failure"]["error"]
