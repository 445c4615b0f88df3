"""
Shared pytest fixtures for the toolkit tests.

This module provides reusable fixtures for loading wave-function files,
building the unit Haar function and seeding random draws.
"""
import numpy as np
import pytest
from pathlib import Path

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction, HaarExpansion, synthesize
from dyadic.io import load_wave_function

# Path to fixture files
FIXTURE_DIR = Path(__file__).parent / "fixtures"

UNIT = DyadicInterval(0, 0)


@pytest.fixture
def fixture_dir() -> Path:
    """Return path to fixtures directory."""
    return FIXTURE_DIR


@pytest.fixture
def load_fixture(fixture_dir):
    """
    Fixture factory to load wave-function JSON files.

    Usage:
        f = load_fixture('haar_unit.json')

    Returns:
        Callable returning a DyadicStepFunction or HaarExpansion
    """
    def _load(filename: str):
        filepath = fixture_dir / filename
        if not filepath.exists():
            raise FileNotFoundError(f"Fixture not found: {filepath}")
        return load_wave_function(filepath)

    return _load


@pytest.fixture
def unit_haar() -> HaarExpansion:
    """h_(0,1] as a one-term expansion."""
    return HaarExpansion(((UNIT, 1.0),))


@pytest.fixture
def unit_haar_step(unit_haar) -> DyadicStepFunction:
    """h_(0,1] as a step function: +1 on (0, 1/2], -1 on (1/2, 1]."""
    return synthesize(unit_haar)


@pytest.fixture
def gapped_step() -> DyadicStepFunction:
    """Normalized step function with a zero gap and a sign change."""
    return DyadicStepFunction(2, [4, 5, 9], [1.0, 2.0, -1.0]).normalized()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for loops of random inputs."""
    return np.random.default_rng(42)
