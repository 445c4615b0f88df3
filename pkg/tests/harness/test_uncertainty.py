"""
Unit tests for the uncertainty products.

Tests cover:
- The Haar equality case of the dyadic inequality
- Spectral and direct paths agreeing on random expansions
- Step functions with a coarse tail
- The Euclidean product and its normalization requirement
"""
import math

import pytest

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction, HaarExpansion, synthesize
from forms.base import NormalizationError
from harness.generators import random_step_function, random_wave_function
from harness.sweep_config import SweepConfig
from harness.uncertainty import (
    REPORT_COLUMNS,
    UncertaintyMethod,
    dyadic_uncertainty,
    dyadic_uncertainty_step,
    euclid_uncertainty,
    gamma,
    relative_slack,
)


class TestGamma:
    """Tests for the lower bound."""

    def test_quarter(self):
        """Test gamma(1/4) = gamma1 gamma2."""
        assert gamma(0.25) == pytest.approx(3.1213203436, abs=1e-10)


class TestDyadicUncertainty:
    """Tests for Q^delta E^delta >= gamma ||phi||^4."""

    def test_haar_is_equality_case(self, unit_haar):
        """Test the unit Haar function meets the bound with zero slack."""
        report = dyadic_uncertainty(unit_haar, 0.25)
        assert report.product == pytest.approx(3.1213203436, abs=1e-10)
        assert report.slack == pytest.approx(0.0, abs=1e-12)
        assert report.passed
        assert relative_slack(report) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("level, offset", [(-3, 0), (2, 3), (6, 40)])
    def test_any_haar_is_equality_case(self, level, offset):
        """Test every Haar function meets the bound."""
        report = dyadic_uncertainty(HaarExpansion(((DyadicInterval(level, offset), 1.0),)), 0.3)
        assert report.product == pytest.approx(gamma(0.3), rel=1e-12)
        assert report.passed

    def test_two_terms_pass_strictly(self, load_fixture):
        """Test a two-term expansion clears the bound strictly."""
        report = dyadic_uncertainty(load_fixture("expansion_two_terms.json"), 0.25)
        assert report.passed
        assert report.slack > 1e-3
        assert report.norm_fourth == pytest.approx(1.0)

    def test_unnormalized_uses_norm_fourth(self):
        """Test the bound scales with ||phi||^4."""
        expansion = HaarExpansion(((DyadicInterval(0, 0), 2.0),))
        report = dyadic_uncertainty(expansion, 0.25)
        assert report.norm_fourth == pytest.approx(16.0)
        assert report.product == pytest.approx(16.0 * gamma(0.25))
        assert report.passed

    @pytest.mark.parametrize("s", [0.1, 0.3])
    def test_direct_matches_spectral(self, s):
        """Test the direct and spectral paths give the same product."""
        sweep_config = SweepConfig(s_grid=(), level_range=(-2, 4), max_coefficients=16)
        for trial in range(10):
            expansion = random_wave_function(5, sweep_config, trial)
            spectral = dyadic_uncertainty(expansion, s, UncertaintyMethod.SPECTRAL)
            direct = dyadic_uncertainty(expansion, s, "direct")
            assert direct.product == pytest.approx(spectral.product, rel=1e-8)
            assert spectral.passed and direct.passed

    @pytest.mark.edge_case
    def test_zero_expansion(self):
        """Test the zero expansion raises NormalizationError."""
        with pytest.raises(NormalizationError):
            dyadic_uncertainty(HaarExpansion(), 0.25)

    def test_row_columns(self, unit_haar):
        """Test the report row columns."""
        row = dyadic_uncertainty(unit_haar, 0.25).to_row()
        assert list(row) == REPORT_COLUMNS
        assert row["pass"] is True


class TestStepUncertainty:
    """Tests for step functions outside the finite span."""

    def test_indicator(self):
        """Test an indicator through both step-function paths."""
        f = DyadicStepFunction.indicator(DyadicInterval(0, 1))
        direct = dyadic_uncertainty_step(f, 0.25)
        spectral = dyadic_uncertainty_step(f, 0.25, UncertaintyMethod.SPECTRAL)
        assert direct.product == pytest.approx(spectral.product, rel=1e-10)
        assert direct.passed

    def test_random_step_functions(self):
        """Test random step functions satisfy the dyadic inequality."""
        sweep_config = SweepConfig(s_grid=(), level_range=(-2, 4), max_coefficients=10)
        for trial in range(10):
            report = dyadic_uncertainty_step(random_step_function(9, sweep_config, trial), 0.2)
            assert report.passed

    @pytest.mark.edge_case
    def test_zero_function(self):
        """Test the zero step function raises NormalizationError."""
        with pytest.raises(NormalizationError):
            dyadic_uncertainty_step(DyadicStepFunction.zero(), 0.25)


class TestEuclidUncertainty:
    """Tests for Q(|phi|) E(phi) >= gamma on normalized functions."""

    def test_unit_haar(self, unit_haar_step):
        """Test the Euclidean product of h_(0,1] at s = 1/4."""
        report = euclid_uncertainty(unit_haar_step, 0.25)
        assert report.product == pytest.approx(78.012890656, rel=1e-10)
        assert report.norm_fourth == 1.0
        assert report.passed

    def test_gapped(self, gapped_step):
        """Test a gapped function clears the bound."""
        assert euclid_uncertainty(gapped_step, 0.35).passed

    def test_haar_from_expansion(self, load_fixture):
        """Test a synthesized expansion clears the bound."""
        f = synthesize(load_fixture("expansion_two_terms.json"))
        report = euclid_uncertainty(f, 0.1)
        assert report.product > gamma(0.1)

    @pytest.mark.edge_case
    def test_requires_normalization(self):
        """Test unnormalized input is rejected."""
        f = DyadicStepFunction.indicator(DyadicInterval(-1, 0))
        with pytest.raises(NormalizationError, match="normalize"):
            euclid_uncertainty(f, 0.25)

    def test_relative_slack_of_zero_product(self, unit_haar):
        """Test a zero product has infinite relative slack."""
        report = dyadic_uncertainty(unit_haar, 0.25)._replace(product=0.0)
        assert relative_slack(report) == math.inf


@pytest.mark.slow
class TestInequalitiesAtScale:
    """Seeded runs of both inequalities over the full s grid."""

    S_VALUES = [0.05, 0.15, 0.25, 0.35, 0.45]
    TRIALS = 1000

    @pytest.mark.parametrize("method", list(UncertaintyMethod))
    @pytest.mark.parametrize("s", S_VALUES)
    def test_dyadic_random_expansions(self, s, method):
        """Test no expansion falls below gamma(s) ||phi||^4 beyond rounding."""
        sweep_config = SweepConfig(s_grid=(), max_coefficients=64)
        for trial in range(self.TRIALS):
            report = dyadic_uncertainty(random_wave_function(42, sweep_config, trial), s, method)
            assert relative_slack(report) >= -1e-12, (trial, report)

    @pytest.mark.parametrize("s", S_VALUES)
    def test_euclid_random_step_functions(self, s):
        """Test Q(|phi|) E(phi) >= gamma(s) for every normalized step function drawn."""
        sweep_config = SweepConfig(s_grid=(), max_coefficients=64)
        violations = [
            trial
            for trial in range(self.TRIALS)
            if not euclid_uncertainty(random_step_function(42, sweep_config, trial), s).passed
        ]
        assert violations == []
