"""
Unit tests for the stratified Monte Carlo oracle.
"""
import pytest

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction
from forms.dyadic_forms import energy_direct, gamma1, gamma2, position_direct
from oracle.base import IntegralKind
from oracle.stratified import MIN_SAMPLES, dyadic_stratified_oracle, enclosing_interval

SAMPLES = 20_000


class TestEnclosingInterval:
    """Tests for the smallest dyadic interval holding a support."""

    def test_unit_haar(self, unit_haar_step):
        """Test the unit Haar function is enclosed by (0, 1]."""
        assert enclosing_interval(unit_haar_step) == DyadicInterval(0, 0)

    def test_gapped(self, gapped_step):
        """Test a gapped support is enclosed by (0, 4]."""
        assert enclosing_interval(gapped_step) == DyadicInterval(-2, 0)

    def test_single_cell(self):
        """Test a single cell encloses itself."""
        assert enclosing_interval(DyadicStepFunction(3, [5], [1.0])) == DyadicInterval(3, 5)


class TestStratifiedOracle:
    """Tests for the dyadic Monte Carlo estimates."""

    def test_unit_haar_is_exact(self, unit_haar_step):
        """Test the strata are exact on a Haar function."""
        position = dyadic_stratified_oracle(unit_haar_step, IntegralKind.POSITION, 0.25, samples=SAMPLES)
        energy = dyadic_stratified_oracle(unit_haar_step, IntegralKind.ENERGY, 0.25, samples=SAMPLES)
        assert position.value == pytest.approx(gamma1(0.25), abs=1e-9)
        assert energy.value == pytest.approx(gamma2(0.25), abs=1e-9)
        assert position.bound == 0.0
        assert energy.n == SAMPLES

    @pytest.mark.parametrize("kind", list(IntegralKind))
    def test_covers_direct_value(self, gapped_step, kind):
        """Test the estimate covers the direct value within five standard errors."""
        exact = {
            IntegralKind.POSITION: position_direct,
            IntegralKind.ENERGY: energy_direct,
        }[kind](gapped_step, 0.3).value
        estimate = dyadic_stratified_oracle(gapped_step, kind, 0.3, seed=7, samples=50_000)
        assert estimate.bound > 0
        assert estimate.covers(exact, width=5.0)

    def test_deterministic_for_seed(self, gapped_step):
        """Test equal seeds repeat and different seeds differ."""
        first = dyadic_stratified_oracle(gapped_step, IntegralKind.ENERGY, 0.2, seed=3, samples=SAMPLES)
        second = dyadic_stratified_oracle(gapped_step, IntegralKind.ENERGY, 0.2, seed=3, samples=SAMPLES)
        other = dyadic_stratified_oracle(gapped_step, IntegralKind.ENERGY, 0.2, seed=4, samples=SAMPLES)
        assert first == second
        assert other.value != first.value

    def test_zero_function(self):
        """Test the zero function estimates to zero."""
        estimate = dyadic_stratified_oracle(DyadicStepFunction.zero(), IntegralKind.POSITION, 0.25, samples=SAMPLES)
        assert estimate.value == 0.0
        assert estimate.bound == 0.0

    @pytest.mark.edge_case
    def test_sample_floor(self, unit_haar_step):
        """Test too few samples are rejected."""
        with pytest.raises(ValueError):
            dyadic_stratified_oracle(unit_haar_step, IntegralKind.POSITION, 0.25, samples=MIN_SAMPLES - 1)
