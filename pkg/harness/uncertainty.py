"""
Uncertainty products and their pass/fail reports.

The dyadic inequality Q_s * E_s >= gamma(s) ||phi||^4 is checked on finite
Haar expansions (spectral or direct path) and on arbitrary step functions
(complete spectrum or direct path); the Euclidean inequality
Q_s(|phi|) * E_s(phi) >= gamma(s) on L2-normalized step functions.
"""

import math
from enum import Enum
from typing import NamedTuple

import config
from dyadic.haar import DyadicStepFunction, HaarExpansion, complete_spectrum, synthesize
from forms.base import NormalizationError
from forms.dyadic_forms import (
    energy_direct,
    energy_spectral,
    energy_spectral_complete,
    gamma1,
    gamma2,
    position_direct,
    position_spectral,
    position_spectral_complete,
)
from forms.euclid_forms import energy_quadratic, position_quadratic

REPORT_COLUMNS = ["s", "gamma", "Q", "E", "product", "norm4", "slack", "pass"]


class UncertaintyMethod(Enum):
    """
    Which dyadic evaluation path feeds the product.
    """
    SPECTRAL = "spectral"
    DIRECT = "direct"


def gamma(s: float) -> float:
    """gamma(s) = gamma1(s) * gamma2(s), the uncertainty lower bound."""
    return gamma1(s) * gamma2(s)


class UncertaintyReport(NamedTuple):
    """One evaluated uncertainty product against its lower bound."""
    s: float
    position: float
    energy: float
    product: float
    gamma_bound: float
    norm_fourth: float
    slack: float
    passed: bool

    @classmethod
    def build(cls, s: float, position: float, energy: float, norm_fourth: float) -> "UncertaintyReport":
        product = position * energy
        bound = gamma(s)
        slack = product - bound * norm_fourth
        passed = slack >= -config.SLACK_TOLERANCE * abs(product)
        return cls(s, position, energy, product, bound, norm_fourth, slack, bool(passed))

    def to_row(self) -> dict:
        """Row in the fixed report column order."""
        return dict(zip(REPORT_COLUMNS, (
            self.s, self.gamma_bound, self.position, self.energy,
            self.product, self.norm_fourth, self.slack, self.passed,
        )))


def dyadic_uncertainty(
    expansion: HaarExpansion,
    s: float,
    method: UncertaintyMethod = UncertaintyMethod.SPECTRAL,
) -> UncertaintyReport:
    method = UncertaintyMethod(method)
    norm_squared = expansion.norm_squared()
    if norm_squared == 0.0:
        raise NormalizationError("The dyadic uncertainty product needs a nonzero expansion")

    if method is UncertaintyMethod.SPECTRAL:
        position = position_spectral(expansion, s).value
        energy = energy_spectral(expansion, s).value
    else:
        f = synthesize(expansion)
        position = position_direct(f, s).value
        energy = energy_direct(f, s).value

    return UncertaintyReport.build(s, position, energy, norm_squared ** 2)


def dyadic_uncertainty_step(
    f: DyadicStepFunction,
    s: float,
    method: UncertaintyMethod = UncertaintyMethod.DIRECT,
) -> UncertaintyReport:
    """Dyadic inequality for a step function outside the finite span (coarse tail included)."""
    method = UncertaintyMethod(method)
    if f.is_zero:
        raise NormalizationError("The dyadic uncertainty product needs a nonzero function")

    if method is UncertaintyMethod.SPECTRAL:
        spectrum = complete_spectrum(f)
        position = position_spectral_complete(spectrum, s).value
        energy = energy_spectral_complete(spectrum, s).value
    else:
        position = position_direct(f, s).value
        energy = energy_direct(f, s).value

    return UncertaintyReport.build(s, position, energy, f.norm_squared() ** 2)


def require_normalized(f: DyadicStepFunction) -> None:
    norm = f.norm()
    if abs(norm - 1.0) > config.NORMALIZATION_TOLERANCE:
        raise NormalizationError(
            f"Expected ||f||_2 = 1 within {config.NORMALIZATION_TOLERANCE}, got {norm!r}; normalize first"
        )


def euclid_uncertainty(f: DyadicStepFunction, s: float) -> UncertaintyReport:
    """
    Q_s(|f|) E_s(f) against gamma(s) for a normalized step function.

    The bound is gamma(s) itself (norm4 reported as 1), so the report passes
    iff product >= gamma(s) (1 - SLACK_TOLERANCE) up to rounding of the product.
    """
    require_normalized(f)
    position = position_quadratic(f, s).value
    energy = energy_quadratic(f, s).value
    return UncertaintyReport.build(s, position, energy, 1.0)


def relative_slack(report: UncertaintyReport) -> float:
    if report.product == 0.0:
        return math.inf
    return report.slack / report.product
