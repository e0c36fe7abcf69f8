"""Shared pytest fixtures for dsi-bounds tests."""

import pytest

from dsi_bounds.config import OracleGuards
from tests.helpers import make_c5, make_claw, make_e2_k6, make_e4_plus_k2, make_k4


@pytest.fixture
def k4():
    """Return K_4."""
    return make_k4()


@pytest.fixture
def c5():
    """Return C_5."""
    return make_c5()


@pytest.fixture
def claw():
    """Return K_{1,3}."""
    return make_claw()


@pytest.fixture
def e2_k6():
    """Return E_2 u K_6."""
    return make_e2_k6()


@pytest.fixture
def e4_plus_k2():
    """Return E_4 + K_2."""
    return make_e4_plus_k2()


@pytest.fixture
def tiny_guards():
    """Guards small enough that any graph above 5 vertices is refused."""
    return OracleGuards(single=5, family=5, chromatic=5, corpus=3)


@pytest.fixture
def catalog_guards():
    """Guards that admit the 20-vertex dodecahedron."""
    return OracleGuards(single=20, family=20, chromatic=20)
