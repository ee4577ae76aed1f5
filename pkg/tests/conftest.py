"""Shared instances: small rings with known structure, built literally."""

from __future__ import annotations

import pytest

from sring import SRing


@pytest.fixture
def cyc5() -> SRing:
    """Orbit ring of the unit subgroup {1, 4} acting on Z_5."""
    return SRing(5, [[0], [1, 4], [2, 3]])


@pytest.fixture
def units8() -> SRing:
    """Orbit ring of the full unit group acting on Z_8."""
    return SRing(8, [[0], [4], [2, 6], [1, 3, 5, 7]])


@pytest.fixture
def units4() -> SRing:
    """Orbit ring of the full unit group acting on Z_4."""
    return SRing(4, [[0], [2], [1, 3]])


@pytest.fixture
def rank2_4() -> SRing:
    """The two-class ring over Z_4: identity plus everything else."""
    return SRing(4, [[0], [1, 2, 3]])
