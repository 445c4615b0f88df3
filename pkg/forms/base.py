"""
Shared types for form evaluators.

Every evaluator returns a FormEvaluation(value, method, error_bound, warning)
so callers can compare the direct, spectral and oracle paths uniformly.
"""

import math
import sys
from enum import Enum
from typing import NamedTuple, Optional

import config
from dyadic.core import DivergentIntegralError


class ParameterRangeError(DivergentIntegralError):
    """The form order s lies outside (0, 1/2), where the forms diverge."""


class NormalizationError(ValueError):
    """A wave function has the wrong (or zero) L2 norm for the requested operation."""


class FormMethod(Enum):
    """
    Evaluation path that produced a form value.
    """
    DIRECT = "direct"  # exact cell decomposition / antiderivatives
    SPECTRAL = "spectral"  # Haar coefficient formulas
    ORACLE = "oracle"  # series, quadrature or Monte Carlo estimate


class FormEvaluation(NamedTuple):
    """Standard output of every form evaluator."""
    value: float
    method: FormMethod
    error_bound: float = 0.0
    warning: Optional[str] = None

    def to_dict(self) -> dict:
        payload = {
            "errorBound": self.error_bound,
            "method": self.method.value,
            "value": self.value,
        }
        if self.warning:
            payload["warning"] = self.warning
        return payload


def require_s(s: float, margin: float = 0.0) -> None:
    """Reject s outside (margin, 1/2 - margin)."""
    if not math.isfinite(s) or s <= margin or s >= 0.5 - margin:
        raise ParameterRangeError(f"Form order s must lie in (0, 1/2), got {s}")


def validate_s(s: float, margin: float = 0.0) -> Optional[str]:
    """
    Reject out-of-range s; return a warning text when s is valid but outside
    the configured guard [S_GUARD_MIN, S_GUARD_MAX].
    """
    require_s(s, margin)

    if config.S_GUARD_MIN <= s <= config.S_GUARD_MAX:
        return None

    warning = (
        f"s={s} is outside the guard [{config.S_GUARD_MIN}, {config.S_GUARD_MAX}]; "
        f"constants are poorly conditioned here"
    )
    print(f"[FORMS] WARNING: {warning}", file=sys.stderr)
    return warning
