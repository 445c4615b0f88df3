"""
Unit tests for seeded wave-function generators and run configuration.
"""
import pytest
from pydantic import ValidationError

from harness.generators import (
    random_haar_function,
    random_step_function,
    random_wave_function,
    root_exponent_for,
)
from harness.sweep_config import SweepConfig

CONFIG = SweepConfig(s_grid=(0.25,), level_range=(-3, 5), max_coefficients=20)


class TestGenerators:
    """Tests for reproducible random draws."""

    def test_root_exponent(self):
        """Test the root covers the coarsest level in the range."""
        assert root_exponent_for((-3, 5)) == 3
        assert root_exponent_for((2, 5)) == 0

    def test_wave_function_is_reproducible(self):
        """Test draws depend only on seed and trial."""
        base = random_wave_function(1, CONFIG, 7).terms
        assert random_wave_function(1, CONFIG, 7).terms == base
        assert random_wave_function(1, CONFIG, 8).terms != base
        assert random_wave_function(2, CONFIG, 7).terms != base

    def test_wave_function_shape(self):
        """Test expansions are normalized and stay inside the level range and root."""
        for trial in range(25):
            expansion = random_wave_function(3, CONFIG, trial)
            assert 1 <= len(expansion) <= CONFIG.max_coefficients
            assert expansion.norm_squared() == pytest.approx(1.0)
            for interval in expansion.intervals:
                assert -3 <= interval.level <= 5
                assert interval.right <= 2 ** 3

    def test_single_haar(self):
        """Test single-Haar draws have one unit coefficient."""
        for trial in range(10):
            expansion = random_haar_function(3, CONFIG, trial)
            assert len(expansion) == 1
            assert expansion.coefficients.tolist() == [1.0]

    def test_step_function_shape(self):
        """Test step functions are normalized on the finest grid inside the root."""
        for trial in range(25):
            f = random_step_function(3, CONFIG, trial)
            assert f.grid_level == 5
            assert f.norm() == pytest.approx(1.0)
            assert f.support_bounds()[1] <= 2 ** 3

    def test_step_function_is_reproducible(self):
        """Test equal seed and trial give the same step function."""
        first = random_step_function(11, CONFIG, 2)
        second = random_step_function(11, CONFIG, 2)
        assert first.cells() == second.cells()


class TestSweepConfig:
    """Tests for run configuration validation."""

    def test_defaults(self):
        """Test the default trial count and seed."""
        sweep_config = SweepConfig()
        assert sweep_config.trials == 100
        assert sweep_config.seed == 42

    def test_empty_grid_allowed(self):
        """Test an empty s grid is valid."""
        assert SweepConfig(s_grid=(), trials=0).s_grid == ()

    @pytest.mark.edge_case
    @pytest.mark.parametrize("kwargs", [
        {"s_grid": (0.6,)},
        {"s_grid": (0.005,)},
        {"level_range": (3, 1)},
        {"trials": -1},
        {"max_coefficients": 0},
        {"workers": 0},
        {"unknown": 1},
    ])
    def test_rejected(self, kwargs):
        """Test invalid fields raise ValidationError."""
        with pytest.raises(ValidationError):
            SweepConfig(**kwargs)

    def test_frozen(self):
        """Test configurations are immutable."""
        with pytest.raises(ValidationError):
            CONFIG.trials = 5
