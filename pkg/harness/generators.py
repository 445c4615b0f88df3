"""
Seeded random wave functions.

Every draw uses numpy's Generator seeded from SeedSequence([seed, trial]), so
trial i of a run is reproducible on its own, independent of worker scheduling.
Coefficients and cell values are uniform on [-1, 1] before L2 normalization.
"""

import numpy as np

from dyadic.core import DyadicInterval
from dyadic.haar import DyadicStepFunction, HaarExpansion
from harness.sweep_config import SweepConfig


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def root_exponent_for(level_range: tuple[int, int]) -> int:
    """Exponent m of the root (0, 2^m] every generated function lives in."""
    return max(0, -level_range[0])


def random_wave_function(seed: int, config: SweepConfig, trial: int = 0) -> HaarExpansion:
    """
    Random normalized expansion with at most max_coefficients terms at levels
    in level_range, all inside the root (0, 2^m].
    """
    rng = trial_rng(seed, trial)
    j_min, j_max = config.level_range
    m = root_exponent_for(config.level_range)

    target = int(rng.integers(1, config.max_coefficients + 1))
    chosen: dict[DyadicInterval, None] = {}
    for _ in range(10 * target):
        if len(chosen) == target:
            break
        level = int(rng.integers(j_min, j_max + 1))
        offset = int(rng.integers(0, 1 << (level + m)))
        chosen.setdefault(DyadicInterval(level, offset), None)

    intervals = sorted(chosen)
    coefficients = rng.uniform(-1.0, 1.0, size=len(intervals))
    norm = np.sqrt(np.sum(coefficients ** 2))
    if norm == 0.0:
        coefficients[0], norm = 1.0, 1.0

    return HaarExpansion(tuple(zip(intervals, (coefficients / norm).tolist())))


def random_haar_function(seed: int, config: SweepConfig, trial: int = 0) -> HaarExpansion:
    """A single normalized Haar function, the equality case of the dyadic inequality."""
    rng = trial_rng(seed, trial)
    j_min, j_max = config.level_range
    m = root_exponent_for(config.level_range)

    level = int(rng.integers(j_min, j_max + 1))
    offset = int(rng.integers(0, 1 << (level + m)))
    return HaarExpansion(((DyadicInterval(level, offset), 1.0),))


def random_step_function(seed: int, config: SweepConfig, trial: int = 0) -> DyadicStepFunction:
    """
    Random normalized step function on the level-j_max grid.

    Half of the draws occupy a contiguous run of cells; the others scatter the
    same number of cells over a window four times wider, leaving zero gaps.
    """
    rng = trial_rng(seed, trial)
    grid = config.level_range[1]
    m = root_exponent_for(config.level_range)

    count = int(rng.integers(1, config.max_coefficients + 1))
    window = 4 * count
    start = int(rng.integers(0, max((1 << (grid + m)) - window, 0) + 1))

    if rng.random() < 0.5:
        offsets = np.arange(start, start + count)
    else:
        offsets = start + np.sort(rng.choice(window, size=count, replace=False))

    values = rng.uniform(-1.0, 1.0, size=count)
    values[values == 0.0] = 1.0
    return DyadicStepFunction(grid, offsets, values).normalized()
