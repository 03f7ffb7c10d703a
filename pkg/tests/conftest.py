"""Pytest configuration and fixtures for testing."""

import numpy as np
import pytest

from src.curvature import AmbientRestriction, constant_curvature, kulkarni_nomizu, make_curvature_tensor
from src.curvature.generators import random_admissible_ambient, random_algebraic_tensor
from src.utils.rng import run_rng
from src.utils.settings import VerifierSettings


@pytest.fixture
def rng():
    """Seeded generator shared by a single test."""
    return run_rng(42)


@pytest.fixture
def unit_ambient():
    """Ambient restriction of the unit sphere (all sectionals 1)."""
    return AmbientRestriction.from_tensor(constant_curvature(4, 1.0))


@pytest.fixture
def flat_ambient():
    """Ambient restriction of Euclidean space."""
    return AmbientRestriction.from_tensor(constant_curvature(4, 0.0))


@pytest.fixture
def mixed_plane_ambient():
    """Coordinate sectionals all 0.5, sectional range (-1.5, 2.5) over mixed planes."""
    h = np.zeros((4, 4))
    h[0, 1] = h[1, 0] = 1.0
    comp = constant_curvature(4, 0.5).comp + 2.0 * kulkarni_nomizu(h, np.eye(4))
    return AmbientRestriction.from_tensor(make_curvature_tensor(4, comp))


@pytest.fixture
def admissible_ambients():
    """Twenty random ambients with coordinate sectionals in [0, 1]."""
    gen = run_rng(42)
    return [random_admissible_ambient(gen) for _ in range(20)]


@pytest.fixture
def algebraic_tensors():
    """Random algebraic curvature tensors in dimensions 3 to 5."""
    gen = run_rng(7)
    return [random_algebraic_tensor(gen, dim) for dim in (3, 4, 5) for _ in range(5)]


@pytest.fixture
def settings(monkeypatch):
    """Default settings, isolated from CURVGAUGE_* variables of the caller."""
    for key in ("CURVGAUGE_SEED", "CURVGAUGE_WORKERS", "CURVGAUGE_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    return VerifierSettings(_env_file=None)


@pytest.fixture
def pattern_mu():
    """Traceless pattern (1, 1, 1, -3)."""
    return np.array([1.0, 1.0, 1.0, -3.0])
