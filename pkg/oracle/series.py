"""
Level-set series oracle for the closed-form delta integrals.

Around any point x of a dyadic interval I, delta(x, .) is constant on shells
of measure 2^(k-1) |I|; each integral becomes a geometric series whose
remainder after N terms is known exactly (term_N / (1 - ratio)).
"""

import math
from enum import Enum

import numpy as np

import config
from dyadic.core import DivergentIntegralError, DyadicInterval, level_set_measure
from oracle.base import OracleEstimate


class SeriesKind(Enum):
    """
    Integrals the series oracle can reproduce.
    """
    BALL_POWER = "ball_power"  # delta^(alpha-1) over the ball
    COMPLEMENT_POWER = "complement_power"  # delta^(-1-alpha) off the ball
    INTRA_CELL_Q = "intra_cell_Q"  # same-cell position mass, integrated over the cell
    OUTER_TAIL_E = "outer_tail_E"  # exterior energy mass, integrated over the cell


def _resolve(kind: SeriesKind, alpha: float | None, s: float | None) -> tuple[SeriesKind, float, bool]:
    """Map a kind to (base series, alpha, integrate over the cell)."""
    if kind in (SeriesKind.INTRA_CELL_Q, SeriesKind.OUTER_TAIL_E):
        if s is None:
            raise ValueError(f"{kind.value} needs the form order s")
        base = SeriesKind.BALL_POWER if kind is SeriesKind.INTRA_CELL_Q else SeriesKind.COMPLEMENT_POWER
        return base, 2 * s, True

    if alpha is None:
        raise ValueError(f"{kind.value} needs the exponent alpha")
    return kind, alpha, False


def series_terms(
    kind: SeriesKind,
    terms: int,
    alpha: float | None = None,
    s: float | None = None,
    interval: DyadicInterval = DyadicInterval(0, 0),
) -> np.ndarray:
    """The first `terms` shell contributions of the level-set series."""
    base, alpha, over_cell = _resolve(SeriesKind(kind), alpha, s)
    if not math.isfinite(alpha) or alpha <= 0:
        raise DivergentIntegralError(f"The {base.value} series diverges for alpha={alpha}")

    if base is SeriesKind.BALL_POWER:
        shells = range(0, -terms, -1)
        exponent = alpha - 1
    else:
        shells = range(1, terms + 1)
        exponent = -1 - alpha

    # shell k sits at distance 2^k |I| and has measure 2^(k-1) |I|; the
    # product is formed as one power of two so deep shells do not underflow
    k = np.fromiter(shells, dtype=np.int64, count=terms)
    shell_zero = level_set_measure(interval, 0) * interval.measure ** exponent
    values = shell_zero * np.exp2(k * (exponent + 1))
    if over_cell:
        values = values * interval.measure
    return values


def dyadic_series_oracle(
    kind: SeriesKind,
    alpha: float | None = None,
    s: float | None = None,
    interval: DyadicInterval = DyadicInterval(0, 0),
    terms: int | None = None,
) -> OracleEstimate:
    """
    Partial sum of the level-set series plus its exact geometric remainder.

    With terms=None, enough terms are taken for the remainder to drop below
    SERIES_TAIL_TOLERANCE relative to the sum (capped at SERIES_MAX_TERMS).
    """
    kind = SeriesKind(kind)
    _, exponent, _ = _resolve(kind, alpha, s)
    if not math.isfinite(exponent) or exponent <= 0:
        raise DivergentIntegralError(f"The {kind.value} series diverges for exponent {exponent}")

    ratio = 2.0 ** -exponent
    if terms is None:
        needed = math.ceil(math.log(config.SERIES_TAIL_TOLERANCE) / math.log(ratio))
        terms = min(max(needed, 1), config.SERIES_MAX_TERMS)
    if terms < 1:
        raise ValueError(f"Series oracle needs at least one term, got {terms}")

    values = series_terms(kind, terms + 1, alpha=alpha, s=s, interval=interval)
    partial = math.fsum(values[:terms])
    remainder = float(values[terms]) / (1.0 - ratio)
    return OracleEstimate(partial, remainder, terms)
