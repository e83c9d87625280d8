"""Shared fixtures: small hand-checkable instances."""

import pytest

from src.modules.csp.generator import PlantedInstance, gen_planted
from src.modules.csp.models import CspInstance
from tests.factories import EQUALITY, INEQUALITY, make_instance


@pytest.fixture
def equality_edge() -> CspInstance:
    """One equality constraint between 0 (A) and 1 (B)."""
    return make_instance((2, 2), [(0, 1, EQUALITY)], left=(0,))


@pytest.fixture
def triangle() -> CspInstance:
    """Three inequality constraints on a triangle; val = 2/3."""
    return make_instance((2, 2, 2), [(0, 1, INEQUALITY), (1, 2, INEQUALITY), (0, 2, INEQUALITY)])


@pytest.fixture
def empty_edge() -> CspInstance:
    """One edge with no allowed pair."""
    return make_instance((2, 2), [(0, 1, frozenset())], left=(0,))


@pytest.fixture
def planted_small() -> PlantedInstance:
    return gen_planted(4, 4, 2, 2, 3, noise=0.0, seed=7)
