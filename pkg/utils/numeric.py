"""
Small numeric helpers shared by checks, tests and reports.
"""

import math
from typing import Iterable


def relative_error(value: float, reference: float, floor: float = 1e-300) -> float:
    """|value - reference| / |reference|, with the denominator kept away from zero."""
    return abs(value - reference) / max(abs(reference), floor)


def max_relative_error(pairs: Iterable[tuple[float, float]]) -> float:
    """Largest relative_error over (value, reference) pairs; 0 for no pairs."""
    return max((relative_error(v, r) for v, r in pairs), default=0.0)


def scaled_deviation(value: float, scale: float) -> float:
    """|value| / scale for quantities that should vanish relative to `scale`."""
    if scale == 0.0:
        return 0.0 if value == 0.0 else math.inf
    return abs(value) / scale
