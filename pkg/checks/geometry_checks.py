"""
Checks of the dyadic metric, its balls and the closed-form delta integrals.
"""

import math

import numpy as np

from checks.base_check import BaseCheck, CheckContext, CheckResult
from dyadic.core import (
    DivergentCase,
    DivergentIntegralError,
    DyadicInterval,
    contains,
    divergence_witness,
    dyadic_ball,
    dyadic_distance,
    integral_ball_power,
    integral_complement_power,
)
from dyadic.haar import DyadicStepFunction
from forms.base import ParameterRangeError
from forms.dyadic_forms import energy_direct, position_direct
from oracle.series import SeriesKind, dyadic_series_oracle
from utils.numeric import max_relative_error

ALPHAS = (0.1, 0.25, 0.5, 0.75, 1.0)
MEASURE_LEVELS = (2, 0, -2)  # |I| = 1/4, 1, 4


def _is_power_of_two(value: float) -> bool:
    mantissa, _ = math.frexp(value)
    return mantissa == 0.5


class BallGeometryCheck(BaseCheck):
    """delta-balls are dyadic intervals: y in I(x, r) iff delta(x, y) < r."""

    SAMPLES = 1000

    def __init__(self):
        super().__init__("ball-geometry", "dyadic_ball agrees with delta(x, y) < r")

    def run(self, ctx: CheckContext) -> CheckResult:
        rng = np.random.default_rng(ctx.seed)
        mismatches = 0
        for _ in range(self.SAMPLES):
            x = float(rng.uniform(0.0, 8.0)) or 1.0
            exponent = int(rng.integers(-6, 4))
            r = 2.0 ** exponent if rng.random() < 0.25 else float(2.0 ** rng.uniform(-6, 3))
            y = float(max(x + rng.uniform(-2 * r, 2 * r), 2.0 ** -40))

            ball = dyadic_ball(x, r)
            inside = contains(ball, y)
            sized = ball.measure < r <= ball.parent().measure
            if inside != (dyadic_distance(x, y) < r) or not contains(ball, x) or not sized:
                mismatches += 1

        return self.result(mismatches, 0, f"{mismatches} of {self.SAMPLES} samples disagree")


class MetricDominationCheck(BaseCheck):
    """delta is an ultrametric with power-of-two values dominating |x - y|."""

    SAMPLES = 2000

    def __init__(self):
        super().__init__("metric-domination", "ultrametric axioms and |x - y| <= delta")

    def run(self, ctx: CheckContext) -> CheckResult:
        rng = np.random.default_rng(ctx.seed + 1)
        violations = 0
        for _ in range(self.SAMPLES):
            x, y, z = (float(v) or 1.0 for v in rng.uniform(0.0, 16.0, size=3))
            dxy, dyx = dyadic_distance(x, y), dyadic_distance(y, x)
            dxz, dyz = dyadic_distance(x, z), dyadic_distance(y, z)

            ok = (
                dxy == dyx
                and dyadic_distance(x, x) == 0.0
                and (dxy > 0) == (x != y)
                and dxz <= max(dxy, dyz)
                and abs(x - y) <= dxy
                and (dxy == 0.0 or _is_power_of_two(dxy))
            )
            violations += not ok

        return self.result(violations, 0, f"{violations} of {self.SAMPLES} triples violate an axiom")


class BallIntegralsCheck(BaseCheck):
    """Closed-form ball / complement integrals against the level-set series."""

    def __init__(self):
        super().__init__("ball-integrals", "delta integrals match the level-set series oracle")

    def run(self, ctx: CheckContext) -> CheckResult:
        pairs = []
        for alpha in ALPHAS:
            for level in MEASURE_LEVELS:
                interval = DyadicInterval(level, 0)
                ball = dyadic_series_oracle(SeriesKind.BALL_POWER, alpha=alpha, interval=interval)
                complement = dyadic_series_oracle(SeriesKind.COMPLEMENT_POWER, alpha=alpha, interval=interval)
                pairs.append((ball.value, integral_ball_power(alpha, interval)))
                pairs.append((complement.value, integral_complement_power(alpha, interval)))

        # same series seen through the dyadic forms of cell indicators
        for level in MEASURE_LEVELS:
            interval = DyadicInterval(level, 0)
            indicator = DyadicStepFunction.indicator(interval)
            intra = dyadic_series_oracle(SeriesKind.INTRA_CELL_Q, s=ctx.s, interval=interval)
            outer = dyadic_series_oracle(SeriesKind.OUTER_TAIL_E, s=ctx.s, interval=interval)
            pairs.append((position_direct(indicator, ctx.s).value, intra.value))
            pairs.append((energy_direct(indicator, ctx.s).value, 2 * outer.value))

        deviation = max_relative_error(pairs)
        return self.result(deviation, ctx.tolerance, f"{len(pairs)} integrals")


class DivergentIntegralsCheck(BaseCheck):
    """Divergent exponent regimes are detected and rejected, never evaluated."""

    def __init__(self):
        super().__init__("divergent-integrals", "divergent regimes raise typed errors")

    def run(self, ctx: CheckContext) -> CheckResult:
        failures = [case.value for case in DivergentCase if not divergence_witness(case)]

        rejected = [
            lambda: integral_ball_power(-0.5, DyadicInterval(0, 0)),
            lambda: integral_complement_power(0.0, DyadicInterval(0, 0)),
            lambda: dyadic_series_oracle(SeriesKind.BALL_POWER, alpha=-1.0),
            lambda: position_direct(DyadicStepFunction.indicator(DyadicInterval(0, 0)), 0.5),
            lambda: energy_direct(DyadicStepFunction.indicator(DyadicInterval(0, 0)), 0.0),
        ]
        for index, call in enumerate(rejected):
            try:
                call()
                failures.append(f"call {index} accepted")
            except (DivergentIntegralError, ParameterRangeError):
                pass

        return self.result(len(failures), 0, ", ".join(failures) or "all divergent cases rejected")
