"""
Checks of the Haar closed forms: variance, dyadic and Euclidean Haar values,
orthogonality of the bilinear forms and the spectral identities.
"""

import math

import config
from checks.base_check import BaseCheck, CheckContext, CheckResult
from dyadic.core import DyadicInterval
from dyadic.haar import HaarExpansion, complete_spectrum, synthesize
from forms.dyadic_forms import (
    energy_bilinear_direct,
    energy_direct,
    energy_spectral,
    energy_spectral_complete,
    haar_energy_closed,
    haar_position_closed,
    position_bilinear_direct,
    position_direct,
    position_spectral,
    position_spectral_complete,
)
from forms.euclid_forms import (
    energy_quadratic,
    haar_energy_euclid_closed,
    haar_position_euclid_closed,
    position_quadratic,
    variance,
)
from harness.generators import random_step_function, random_wave_function
from harness.sweep_config import SweepConfig
from oracle.adaptive import euclid_adaptive_oracle
from oracle.base import IntegralKind
from oracle.stratified import dyadic_stratified_oracle
from utils.numeric import max_relative_error, relative_error, scaled_deviation

OFFSETS = (0, 1, 5)


def haar_intervals(levels: tuple[int, int]) -> list[DyadicInterval]:
    j_min, j_max = levels
    return [DyadicInterval(j, k) for j in range(j_min, j_max + 1) for k in OFFSETS]


def haar(interval: DyadicInterval):
    return synthesize(HaarExpansion(((interval, 1.0),)))


class HaarVarianceCheck(BaseCheck):
    def __init__(self):
        super().__init__("haar-variance", "Var|h|^2 = |I|^2 / 12")

    def run(self, ctx: CheckContext) -> CheckResult:
        pairs = [(variance(haar(I)), I.measure ** 2 / 12) for I in haar_intervals(ctx.levels)]
        return self.result(max_relative_error(pairs), ctx.tolerance, f"{len(pairs)} Haar functions")


class _HaarDyadicCheck(BaseCheck):
    """Direct dyadic form on Haar functions vs its closed form, plus a stratified oracle line."""

    kind: IntegralKind
    direct = None
    closed = None

    def run(self, ctx: CheckContext) -> CheckResult:
        pairs = [
            (type(self).direct(haar(I), ctx.s).value, type(self).closed(I, ctx.s))
            for I in haar_intervals(ctx.levels)
        ]
        exact = self.result(max_relative_error(pairs), ctx.tolerance, f"{len(pairs)} Haar functions")

        unit = DyadicInterval(0, 0)
        reference = type(self).closed(unit, ctx.s)
        estimate = dyadic_stratified_oracle(haar(unit), self.kind, ctx.s, ctx.seed, ctx.samples)
        oracle_tolerance = 3 * estimate.bound / abs(reference) + ctx.oracle_tolerance
        oracle = self.result(
            relative_error(estimate.value, reference),
            oracle_tolerance,
            f"stratified {estimate.value:.10g} +- {estimate.bound:.2e}",
        )
        return self.combine(exact, oracle)


class HaarPositionDyadicCheck(_HaarDyadicCheck):
    kind = IntegralKind.POSITION
    direct = position_direct
    closed = haar_position_closed

    def __init__(self):
        super().__init__("haar-position-dyadic", "Q_s(h) = gamma1(s) |I|^2s")


class HaarEnergyDyadicCheck(_HaarDyadicCheck):
    kind = IntegralKind.ENERGY
    direct = energy_direct
    closed = haar_energy_closed

    def __init__(self):
        super().__init__("haar-energy-dyadic", "E_s(h) = gamma2(s) |I|^-2s")


class HaarOrthogonalityCheck(BaseCheck):
    """Both bilinear forms vanish on distinct Haar pairs (disjoint, nested, translated)."""

    def __init__(self):
        super().__init__("haar-orthogonality", "E_s(h, h') = Q_s(h, h') = 0 for h != h'")

    def run(self, ctx: CheckContext) -> CheckResult:
        intervals = haar_intervals(ctx.levels)
        functions = {I: haar(I) for I in intervals}
        diagonal = {
            I: (position_direct(f, ctx.s).value, energy_direct(f, ctx.s).value)
            for I, f in functions.items()
        }

        deviations = []
        for index, first in enumerate(intervals):
            for second in intervals[index + 1:]:
                f, g = functions[first], functions[second]
                q_scale = math.sqrt(diagonal[first][0] * diagonal[second][0])
                e_scale = math.sqrt(diagonal[first][1] * diagonal[second][1])
                deviations.append(scaled_deviation(position_bilinear_direct(f, g, ctx.s).value, q_scale))
                deviations.append(scaled_deviation(energy_bilinear_direct(f, g, ctx.s).value, e_scale))

        return self.result(max(deviations), ctx.tolerance, f"{len(deviations) // 2} pairs")


class SpectralIdentityCheck(BaseCheck):
    """Spectral Haar formulas against the direct double sums."""

    TRIALS = 100

    def __init__(self):
        super().__init__("spectral-identity", "spectral and direct dyadic forms agree")

    def run(self, ctx: CheckContext) -> CheckResult:
        sweep_config = SweepConfig(s_grid=(), seed=ctx.seed, level_range=(-4, 6))
        pairs = []
        for trial in range(self.TRIALS):
            expansion = random_wave_function(ctx.seed, sweep_config, trial)
            f = synthesize(expansion)
            pairs.append((position_spectral(expansion, ctx.s).value, position_direct(f, ctx.s).value))
            pairs.append((energy_spectral(expansion, ctx.s).value, energy_direct(f, ctx.s).value))

            # step functions off the finite span, through their complete spectrum
            step = random_step_function(ctx.seed, sweep_config, trial)
            spectrum = complete_spectrum(step)
            pairs.append((position_spectral_complete(spectrum, ctx.s).value, position_direct(step, ctx.s).value))
            pairs.append((energy_spectral_complete(spectrum, ctx.s).value, energy_direct(step, ctx.s).value))

        tolerance = max(ctx.tolerance, config.SPECTRAL_TOLERANCE)
        return self.result(max_relative_error(pairs), tolerance, f"{self.TRIALS} expansions and step functions")


class HaarEuclidFormsCheck(BaseCheck):
    """Euclidean Haar closed forms against the antiderivative evaluators and the quadrature oracle."""

    def __init__(self):
        super().__init__("haar-euclid-forms", "Q_s(|h|) and E_s(h) closed forms on the line")

    def run(self, ctx: CheckContext) -> CheckResult:
        j_min, j_max = ctx.levels
        pairs = []
        for level in range(j_min, j_max + 1):
            interval = DyadicInterval(level, 0)
            h = haar(interval)
            pairs.append((position_quadratic(h, ctx.s).value, haar_position_euclid_closed(interval, ctx.s)))
            pairs.append((energy_quadratic(h, ctx.s).value, haar_energy_euclid_closed(interval, ctx.s)))
        exact = self.result(max_relative_error(pairs), ctx.tolerance, f"{len(pairs)} closed forms")

        unit = DyadicInterval(0, 0)
        h = haar(unit)
        oracle_pairs = [
            (euclid_adaptive_oracle(h, IntegralKind.POSITION, ctx.s).value, haar_position_euclid_closed(unit, ctx.s)),
            (euclid_adaptive_oracle(h, IntegralKind.ENERGY, ctx.s).value, haar_energy_euclid_closed(unit, ctx.s)),
        ]
        oracle = self.result(max_relative_error(oracle_pairs), ctx.oracle_tolerance, "adaptive oracle")
        return self.combine(exact, oracle)
