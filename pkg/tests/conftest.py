"""Shared helpers for the test suite."""

import pytest

from linsymp.matrix import Matrix


@pytest.fixture
def mat():
    """Shorthand constructor: mat([[...], ...]) with int/str entries."""
    return Matrix.from_rows


def write_json(tmp_path, name, payload):
    import json

    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)
