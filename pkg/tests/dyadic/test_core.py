"""
Unit tests for the dyadic geometry.

Tests cover:
- Exact dyadic values and snapping
- The dyadic metric (ultrametric axioms, domination of |x - y|, shifted grids)
- delta-balls and their sizes
- Closed-form ball / complement integrals and the divergent regimes
- Pairwise cell distances
"""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from dyadic.core import (
    DivergentCase,
    DivergentIntegralError,
    DyadicInterval,
    DyadicRational,
    GridError,
    GridOrigin,
    ball_level,
    cell_distance_matrix,
    contains,
    divergence_terms,
    divergence_witness,
    dyadic_ball,
    dyadic_distance,
    integral_ball_power,
    integral_complement_power,
    interval_index,
    level_set_measure,
    to_dyadic,
)

points = st.floats(min_value=1e-3, max_value=100.0, allow_nan=False, allow_infinity=False)
radii = st.floats(min_value=2.0 ** -6, max_value=8.0, allow_nan=False, allow_infinity=False)


class TestDyadicValues:
    """Tests for exact dyadic values and intervals."""

    def test_rational_is_reduced(self):
        """Test the numerator is stored odd with the exponent adjusted."""
        value = DyadicRational(12, 4)
        assert (value.numerator, value.exponent) == (3, 2)
        assert float(value) == 0.75

    def test_rational_from_value(self):
        """Test a short float converts to its exact fraction."""
        assert DyadicRational.from_value(0.375).as_fraction() == Fraction(3, 8)

    @pytest.mark.parametrize("value, level, expected", [
        (0.375, 2, 1),
        (0.375, 0, 0),
        (0.5, 1, 0),
        (0.5, 3, 3),
        (5, -1, 2),
        (4, -1, 1),
    ])
    def test_cell_index(self, value, level, expected):
        """Test a grid point belongs to the cell on its left."""
        assert DyadicRational.from_value(value).cell_index(level) == expected

    @pytest.mark.edge_case
    def test_cell_index_of_zero(self):
        """Test zero lies outside every interval."""
        with pytest.raises(GridError):
            DyadicRational(0, 0).cell_index(3)

    def test_interval_endpoints(self):
        """Test endpoints and measure of a fine interval."""
        interval = DyadicInterval(2, 1)
        assert interval.left == Fraction(1, 4)
        assert interval.right == Fraction(1, 2)
        assert interval.measure == 0.25

    def test_negative_level_interval(self):
        """Test intervals longer than one at negative levels."""
        interval = DyadicInterval(-2, 1)
        assert (interval.left, interval.right) == (4, 8)
        assert interval.measure == 4.0

    def test_parent_children_ancestor(self):
        """Test the parent, child and ancestor relations."""
        interval = DyadicInterval(3, 5)
        assert interval.parent() == DyadicInterval(2, 2)
        assert interval.parent().children()[1] == interval
        assert interval.ancestor(0) == DyadicInterval(0, 0)
        assert DyadicInterval(0, 0).contains_interval(interval)
        assert DyadicInterval(1, 1).contains_interval(interval)
        assert not DyadicInterval(1, 0).contains_interval(interval)

    def test_negative_offset_rejected(self):
        """Test negative offsets raise GridError."""
        with pytest.raises(GridError):
            DyadicInterval(0, -1)

    def test_to_dyadic_keeps_short_floats(self):
        """Test floats within the resolution are kept exactly."""
        assert to_dyadic(0.75) == Fraction(3, 4)

    def test_to_dyadic_snaps_long_floats(self):
        """Test finer floats snap up to the resolution grid."""
        snapped = to_dyadic(0.1)
        assert 0 <= snapped - Fraction(0.1) < Fraction(1, 2 ** 52)
        assert (snapped * 2 ** 52).denominator == 1

    def test_to_dyadic_snaps_to_right_endpoint(self):
        """Test non-dyadic rationals snap to their cell's right endpoint."""
        assert to_dyadic(Fraction(1, 3), resolution=4) == Fraction(3, 8)

    def test_interval_index_is_right_closed(self):
        """Test grid points belong to the interval on their left."""
        assert interval_index(0.5, 1) == 0
        assert interval_index(0.75, 1) == 1

    def test_contains_is_right_closed(self):
        """Test membership excludes the left endpoint and includes the right."""
        interval = DyadicInterval(1, 0)
        assert contains(interval, 0.5)
        assert not contains(interval, 0.0)
        assert not contains(interval, 0.5000001)


class TestDyadicDistance:
    """Tests for the dyadic metric."""

    def test_known_distances(self):
        """Test distances of hand-computed point pairs."""
        assert dyadic_distance(0.3, 0.7) == 1.0
        assert dyadic_distance(0.3, 0.4) == 0.25
        assert dyadic_distance(1.5, 2.5) == 4.0

    def test_zero_on_diagonal(self):
        """Test a point has distance zero to itself."""
        assert dyadic_distance(0.3, 0.3) == 0.0

    def test_shifted_origin(self):
        """Test distances measured on a grid shifted by x0."""
        origin = GridOrigin.of(1)
        assert dyadic_distance(Fraction(13, 10), Fraction(17, 10), origin) == 1.0

    def test_points_left_of_origin_rejected(self):
        """Test points at or left of the origin raise GridError."""
        with pytest.raises(GridError):
            dyadic_distance(0.0, 1.0)
        with pytest.raises(GridError):
            dyadic_distance(0.5, 2.0, GridOrigin.of(1))

    def test_same_finest_cell(self):
        """Test distinct points in one finest cell are at the resolution distance."""
        x = Fraction(1, 3)
        y = x + Fraction(1, 10 ** 20)
        assert dyadic_distance(x, y) == 2.0 ** -52

    @pytest.mark.property
    @seed(1)
    @settings(deadline=None, max_examples=200)
    @given(x=points, y=points, z=points)
    def test_ultrametric(self, x, y, z):
        """Test symmetry and the strong triangle inequality."""
        assert dyadic_distance(x, y) == dyadic_distance(y, x)
        assert dyadic_distance(x, z) <= max(dyadic_distance(x, y), dyadic_distance(y, z))

    @pytest.mark.property
    @seed(2)
    @settings(deadline=None, max_examples=200)
    @given(x=points, y=points)
    def test_dominates_euclidean_distance(self, x, y):
        """Test |x - y| <= delta(x, y) and delta is a power of two."""
        distance = dyadic_distance(x, y)
        assert abs(x - y) <= distance
        if x != y:
            mantissa, _ = math.frexp(distance)
            assert mantissa == 0.5


class TestBalls:
    """Tests for delta-balls."""

    def test_ball_level(self):
        """Test the level of the largest interval shorter than r."""
        assert ball_level(0.5) == 2
        assert ball_level(0.6) == 1
        assert ball_level(1) == 1
        assert ball_level(3) == -1

    def test_known_balls(self):
        """Test balls of hand-computed centers and radii."""
        assert dyadic_ball(0.3, 0.5) == DyadicInterval(2, 1)
        assert dyadic_ball(0.3, 0.6) == DyadicInterval(1, 0)

    def test_nonpositive_radius_rejected(self):
        """Test a zero radius raises GridError."""
        with pytest.raises(GridError):
            ball_level(0)

    @pytest.mark.property
    @seed(3)
    @settings(deadline=None, max_examples=300)
    @given(x=points, y=points, r=radii)
    def test_ball_is_metric_ball(self, x, y, r):
        """Test ball membership agrees with delta(x, y) < r."""
        ball = dyadic_ball(x, r)
        assert contains(ball, x)
        assert ball.measure < r <= ball.parent().measure
        assert contains(ball, y) == (dyadic_distance(x, y) < r)

    def test_level_set_measure(self):
        """Test measures of the delta level sets around an interval."""
        interval = DyadicInterval(0, 0)
        assert level_set_measure(interval, 1) == 1.0
        assert level_set_measure(interval, 0) == 0.5
        assert level_set_measure(DyadicInterval(2, 3), -1) == 0.0625


class TestIntegrals:
    """Tests for the closed-form delta integrals."""

    def test_ball_power(self):
        """Test the ball integral closed form on the unit interval."""
        assert integral_ball_power(1.0, DyadicInterval(0, 0)) == pytest.approx(1.0)
        assert integral_ball_power(0.5, DyadicInterval(0, 0)) == pytest.approx(1.7071067811865475)

    def test_ball_power_scales(self):
        """Test the ball integral scales with the interval length."""
        unit = integral_ball_power(0.5, DyadicInterval(0, 0))
        assert integral_ball_power(0.5, DyadicInterval(-2, 0)) == pytest.approx(2.0 * unit)

    def test_complement_power(self):
        """Test the complement integral closed form."""
        assert integral_complement_power(1.0, DyadicInterval(0, 0)) == pytest.approx(0.5)
        assert integral_complement_power(1.0, DyadicInterval(2, 0)) == pytest.approx(2.0)

    @pytest.mark.edge_case
    @pytest.mark.parametrize("alpha", [0.0, -0.5, math.inf, math.nan])
    def test_divergent_exponents_rejected(self, alpha):
        """Test divergent exponents raise DivergentIntegralError."""
        with pytest.raises(DivergentIntegralError):
            integral_ball_power(alpha, DyadicInterval(0, 0))
        with pytest.raises(DivergentIntegralError):
            integral_complement_power(alpha, DyadicInterval(0, 0))

    @pytest.mark.parametrize("case", list(DivergentCase))
    def test_divergence_witnessed(self, case):
        """Test each divergent regime produces non-vanishing series terms."""
        assert divergence_witness(case)
        terms = divergence_terms(case, terms=16)
        assert terms.size == 16
        assert np.all(terms > 0)


class TestCellDistances:
    """Tests for pairwise cell distances."""

    def test_matrix(self):
        """Test the pairwise distance matrix of three cells."""
        cells = [DyadicInterval(1, 0), DyadicInterval(1, 1), DyadicInterval(2, 4)]
        expected = np.array([
            [0.0, 1.0, 2.0],
            [1.0, 0.0, 2.0],
            [2.0, 2.0, 0.0],
        ])
        np.testing.assert_array_equal(cell_distance_matrix(cells), expected)

    def test_matches_pointwise_distance(self, rng):
        """Test the matrix agrees with the metric at the right endpoints."""
        cells = [DyadicInterval(3, int(k)) for k in sorted(rng.choice(64, size=10, replace=False))]
        matrix = cell_distance_matrix(cells)
        for i, first in enumerate(cells):
            for j, second in enumerate(cells):
                if i != j:
                    assert matrix[i, j] == dyadic_distance(first.right, second.right)

    def test_empty(self):
        """Test no cells give an empty matrix."""
        assert cell_distance_matrix([]).shape == (0, 0)
