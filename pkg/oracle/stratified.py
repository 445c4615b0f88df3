"""
Stratified Monte Carlo oracle for the dyadic forms.

Pairs (x, y) are stratified by delta-shells of the smallest dyadic interval G
holding the support: on the shell delta = |G| 2^-l the kernel is constant, so
only the function factor is sampled. Pairs below the grid resolution and pairs
leaving G have closed-form weights and only need E[f^2] over G.
"""

import math
import sys

import numpy as np

import config
from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction
from forms.base import validate_s
from oracle.base import IntegralKind, OracleEstimate

MIN_SAMPLES = 10_000


def enclosing_interval(f: DyadicStepFunction) -> DyadicInterval:
    """Smallest dyadic interval containing every cell of f."""
    first, last = int(f.offsets[0]), int(f.offsets[-1])
    depth = (first ^ last).bit_length()
    return DyadicInterval(f.grid_level - depth, first >> depth)


def _split(total: int, parts: int) -> list[int]:
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def dyadic_stratified_oracle(
    f: DyadicStepFunction,
    kind: IntegralKind,
    s: float,
    seed: int = config.DEFAULT_SEED,
    samples: int = config.STRATIFIED_SAMPLES,
) -> OracleEstimate:
    """
    Estimate Q_s(f) (position) or E_s(f) (energy) for the dyadic kernel.

    Samples are split evenly across strata; the bound is the combined
    standard error sqrt(sum of per-stratum variances).
    """
    kind = IntegralKind(kind)
    validate_s(s)
    if samples < MIN_SAMPLES:
        raise ValueError(f"Stratified oracle needs at least {MIN_SAMPLES} samples, got {samples}")
    if f.is_zero:
        return OracleEstimate(0.0, 0.0, samples)

    rng = np.random.default_rng(seed)
    root = enclosing_interval(f)
    size = root.measure
    left = float(root.left)
    depth = f.grid_level - root.level

    counts = _split(samples, depth + 1)
    estimates, variances = [], []

    # cross-cell shells: x in the left half, y in the right half of a level-(g+l) subinterval
    for shell, n in enumerate(counts[:depth]):
        width = math.ldexp(size, -shell)
        blocks = rng.integers(0, 1 << shell, size=n)
        x = left + blocks * width + rng.random(n) * (width / 2)
        y = left + blocks * width + (0.5 + rng.random(n) / 2) * width

        fx, fy = f.evaluate(x), f.evaluate(y)
        if kind is IntegralKind.POSITION:
            factor, kernel = fx * fy, width ** (2 * s - 1)
        else:
            factor, kernel = (fx - fy) ** 2, width ** (-1 - 2 * s)

        weight = size * width / 2 * kernel
        estimates.append(weight * factor.mean())
        variances.append(weight ** 2 * factor.var(ddof=1) / n)

    # closed-weight stratum: same-cell pairs (position) or pairs leaving G (energy)
    n = counts[depth]
    squared = f.evaluate(left + rng.random(n) * size) ** 2
    geometric = -2.0 * math.expm1(-2 * s * math.log(2))
    if kind is IntegralKind.POSITION:
        weight = size ** (2 * s + 1) * 2.0 ** (-2 * s * depth) / geometric
    else:
        weight = 2.0 * size ** (1 - 2 * s) * 2.0 ** (-2 * s) / geometric
    estimates.append(weight * squared.mean())
    variances.append(weight ** 2 * squared.var(ddof=1) / n)

    value = math.fsum(estimates)
    error = math.sqrt(math.fsum(variances))
    print(f"[ORACLE] stratified {kind.value}: {depth + 1} strata, {samples} samples, se {error:.3e}", file=sys.stderr)
    return OracleEstimate(value, error, samples)
