"""
Haar system on the positive half-line and dyadic step functions.

Provides helpers to:
- Evaluate Haar functions h_I(x) = 2^(j/2) h(2^j x - k)
- Represent wave functions as DyadicStepFunction (cell values on a uniform
  grid) or HaarExpansion (finite coefficient maps)
- Move between the two representations (synthesize / analyze) exactly on the span
- Compute the complete spectrum of a step function, including its infinite
  coarse-scale tail
- Build canonical dyadic partitions, the representation every form evaluator works on
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np

import config
from dyadic.core import (
    DyadicInterval,
    GridError,
    RealLike,
    _as_fraction,
    _scale,
    contains,
)


def haar_amplitude(level: int) -> float:
    """2^(j/2), the height of h_I for |I| = 2^-j."""
    return math.sqrt(math.ldexp(1.0, level))


def haar_eval(interval: DyadicInterval, x: RealLike) -> float:
    """Value of h_I at x: +2^(j/2) on the left half, -2^(j/2) on the right half, 0 outside."""
    if not contains(interval, x):
        return 0.0

    midpoint = (interval.left + interval.right) / 2
    amplitude = haar_amplitude(interval.level)
    return amplitude if _as_fraction(x) <= midpoint else -amplitude


# ----------------------------------------------------
# Step functions
# ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class DyadicStepFunction:
    """
    A finite step function on the level-J grid of (0, inf).

    Cell k is (k 2^-J, (k+1) 2^-J]; omitted cells are zero. Offsets are
    strictly increasing and non-negative; arrays are read-only.
    """

    grid_level: int
    offsets: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        offsets = np.array(self.offsets, dtype=np.int64).reshape(-1)
        values = np.array(self.values, dtype=np.float64).reshape(-1)

        if offsets.shape != values.shape:
            raise ValueError("Step function offsets and values must have the same length")
        if offsets.size and offsets[0] < 0:
            raise GridError("Step function support must lie in (0, inf)")
        if np.any(np.diff(offsets) <= 0):
            raise ValueError("Step function offsets must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValueError("Step function values must be finite")

        offsets.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_cells(cls, grid_level: int, cells: Iterable[tuple[int, float]]) -> "DyadicStepFunction":
        pairs = list(cells)
        return cls(
            grid_level,
            [k for k, _ in pairs],
            [v for _, v in pairs],
        )

    @classmethod
    def zero(cls, grid_level: int = 0) -> "DyadicStepFunction":
        return cls(grid_level, [], [])

    @classmethod
    def indicator(cls, interval: DyadicInterval, height: float = 1.0) -> "DyadicStepFunction":
        return cls(interval.level, [interval.offset], [height])

    # ---- basic quantities ----

    @property
    def cell_length(self) -> float:
        return math.ldexp(1.0, -self.grid_level)

    @property
    def is_zero(self) -> bool:
        return not np.any(self.values)

    def cells(self) -> list[tuple[int, float]]:
        return [(int(k), float(v)) for k, v in zip(self.offsets, self.values)]

    def norm_squared(self) -> float:
        return float(np.sum(self.values ** 2) * self.cell_length)

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def integral(self) -> float:
        return float(np.sum(self.values) * self.cell_length)

    def support_bounds(self) -> tuple[Fraction, Fraction]:
        """Exact (inf, sup) of the cells carried by the function."""
        if not self.offsets.size:
            raise ValueError("The zero function has no support")
        return (
            _scale(int(self.offsets[0]), self.grid_level),
            _scale(int(self.offsets[-1]) + 1, self.grid_level),
        )

    # ---- transformations ----

    def with_values(self, values: Sequence[float]) -> "DyadicStepFunction":
        return DyadicStepFunction(self.grid_level, self.offsets, values)

    def scaled(self, factor: float) -> "DyadicStepFunction":
        return self.with_values(self.values * factor)

    def absolute(self) -> "DyadicStepFunction":
        return self.with_values(np.abs(self.values))

    def normalized(self) -> "DyadicStepFunction":
        norm = self.norm()
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero function")
        return self.scaled(1.0 / norm)

    def refine(self, level: int) -> "DyadicStepFunction":
        """Same function on the finer grid of the given level."""
        if level < self.grid_level:
            raise GridError(f"Cannot coarsen a level-{self.grid_level} grid to level {level}")
        factor = 1 << (level - self.grid_level)
        if factor == 1:
            return self

        offsets = (self.offsets[:, None] * factor + np.arange(factor)).ravel()
        return DyadicStepFunction(level, offsets, np.repeat(self.values, factor))

    def translated(self, shift: RealLike) -> "DyadicStepFunction":
        """x -> f(x - shift) for a dyadic shift; refines the grid when needed."""
        exact = _as_fraction(shift)
        denominator = exact.denominator
        if denominator & (denominator - 1):
            raise GridError(f"Translation {shift} is not a dyadic rational")

        level = max(self.grid_level, denominator.bit_length() - 1)
        refined = self.refine(level)
        cells_shift = exact * _scale(1, -level)
        return DyadicStepFunction(level, refined.offsets + int(cells_shift), refined.values)

    def dilated(self, power: int) -> "DyadicStepFunction":
        """x -> f(x / 2^power): same cells on a grid 2^power times coarser."""
        return DyadicStepFunction(self.grid_level - power, self.offsets, self.values)

    def restricted_right(self, x0: RealLike) -> "DyadicStepFunction":
        """Restriction to (x0, inf); x0 must be a point of the grid."""
        cut = _as_fraction(x0) * _scale(1, -self.grid_level)
        if cut.denominator != 1:
            raise GridError(f"Cut point {x0} is not on the level-{self.grid_level} grid")
        keep = self.offsets >= int(cut)
        return DyadicStepFunction(self.grid_level, self.offsets[keep], self.values[keep])

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Vectorized point evaluation (cells are right-closed)."""
        points = np.asarray(points, dtype=np.float64)
        indices = np.ceil(np.ldexp(points, self.grid_level)).astype(np.int64) - 1
        positions = np.searchsorted(self.offsets, indices)
        positions = np.clip(positions, 0, max(self.offsets.size - 1, 0))

        if not self.offsets.size:
            return np.zeros_like(points)
        hit = self.offsets[positions] == indices
        return np.where(hit & (points > 0), self.values[positions], 0.0)


def canonical_partition(
    *functions: DyadicStepFunction,
) -> tuple[list[DyadicInterval], np.ndarray]:
    """
    Coarsest dyadic partition of the joint support on which every function is constant.

    Sibling cells carrying identical value rows are merged into their parent
    repeatedly; cells where all functions vanish are dropped. Returns the
    cells sorted left to right and an (n_cells, n_functions) value matrix.
    """
    if not functions:
        raise ValueError("canonical_partition needs at least one function")

    level = max(f.grid_level for f in functions)
    rows: dict[int, list[float]] = {}
    for column, function in enumerate(functions):
        refined = function.refine(level)
        for k, v in zip(refined.offsets.tolist(), refined.values.tolist()):
            rows.setdefault(k, [0.0] * len(functions))[column] = v

    current = {k: tuple(row) for k, row in rows.items() if any(row)}
    cells: list[DyadicInterval] = []
    values: list[tuple[float, ...]] = []

    while current:
        merged: dict[int, tuple[float, ...]] = {}
        for k, row in current.items():
            if current.get(k ^ 1) == row:
                merged[k >> 1] = row
            else:
                cells.append(DyadicInterval(level, k))
                values.append(row)
        current = merged
        level -= 1

    order = sorted(range(len(cells)), key=lambda i: cells[i].left)
    matrix = np.array([values[i] for i in order], dtype=np.float64).reshape(len(order), len(functions))
    return [cells[i] for i in order], matrix


def inner_product(f: DyadicStepFunction, g: DyadicStepFunction) -> float:
    """<f, g> summed over the common refinement grid."""
    level = max(f.grid_level, g.grid_level)
    f_fine, g_fine = f.refine(level), g.refine(level)

    _, f_index, g_index = np.intersect1d(f_fine.offsets, g_fine.offsets, return_indices=True)
    products = f_fine.values[f_index] * g_fine.values[g_index]
    return float(np.sum(products) * math.ldexp(1.0, -level))


# ----------------------------------------------------
# Haar expansions
# ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class HaarExpansion:
    """Finite map DyadicInterval -> coefficient, stored sorted by (level, offset)."""

    terms: tuple[tuple[DyadicInterval, float], ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(((i, float(c)) for i, c in self.terms), key=lambda t: t[0]))
        intervals = [i for i, _ in ordered]
        if len(set(intervals)) != len(intervals):
            raise ValueError("Haar expansion indices must be distinct")
        if not all(math.isfinite(c) for _, c in ordered):
            raise ValueError("Haar coefficients must be finite")
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def from_mapping(cls, mapping: Mapping[DyadicInterval, float]) -> "HaarExpansion":
        return cls(tuple(mapping.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[DyadicInterval, float]]:
        return iter(self.terms)

    def as_dict(self) -> dict[DyadicInterval, float]:
        return dict(self.terms)

    @property
    def intervals(self) -> list[DyadicInterval]:
        return [i for i, _ in self.terms]

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([c for _, c in self.terms], dtype=np.float64)

    @property
    def measures(self) -> np.ndarray:
        return np.array([i.measure for i, _ in self.terms], dtype=np.float64)

    def norm_squared(self) -> float:
        """||phi||_2^2 by Parseval on the finite span."""
        return float(np.sum(self.coefficients ** 2))

    def scaled(self, factor: float) -> "HaarExpansion":
        return HaarExpansion(tuple((i, c * factor) for i, c in self.terms))

    def normalized(self) -> "HaarExpansion":
        norm = math.sqrt(self.norm_squared())
        if norm == 0.0:
            raise ValueError("Cannot normalize the zero expansion")
        return self.scaled(1.0 / norm)


def synthesize(expansion: HaarExpansion) -> DyadicStepFunction:
    """
    The step function sum c_I h_I on the grid one level finer than the finest
    interval of the expansion.
    """
    if not len(expansion):
        return DyadicStepFunction.zero()

    grid = max(i.level for i in expansion.intervals) + 1
    spans = []
    for interval, coefficient in expansion:
        half = 1 << (grid - interval.level - 1)
        spans.append((interval.offset << (grid - interval.level), half, interval, coefficient))

    low = min(first for first, _, _, _ in spans)
    high = max(first + 2 * half for first, half, _, _ in spans)
    if high - low > config.MAX_GRID_CELLS:
        raise ValueError(
            f"Expansion spans {high - low} grid cells, above MAX_GRID_CELLS={config.MAX_GRID_CELLS}"
        )

    dense = np.zeros(high - low)
    for first, half, interval, coefficient in spans:
        start = first - low
        height = coefficient * haar_amplitude(interval.level)
        dense[start:start + half] += height
        dense[start + half:start + 2 * half] -= height

    nonzero = np.flatnonzero(dense)
    return DyadicStepFunction(grid, nonzero + low, dense[nonzero])


def _block_sums(dense: np.ndarray, low: int, width: int) -> tuple[int, np.ndarray]:
    """Sums of `dense` (cells low, low+1, ...) over aligned blocks of `width` cells."""
    first_block = low // width
    pad_front = low - first_block * width
    total = pad_front + dense.size
    blocks = -(-total // width)

    if width <= dense.size:
        padded = np.zeros(blocks * width)
        padded[pad_front:pad_front + dense.size] = dense
        return first_block, padded.reshape(blocks, width).sum(axis=1)

    # wide blocks: at most two of them touch the data
    sums = np.zeros(blocks)
    for b in range(blocks):
        start = max(b * width - pad_front, 0)
        stop = min((b + 1) * width - pad_front, dense.size)
        sums[b] = dense[start:stop].sum()
    return first_block, sums


def analyze(
    f: DyadicStepFunction,
    level_range: tuple[int, int],
) -> tuple[HaarExpansion, float]:
    """
    Haar coefficients <f, h_I> for every I with j_min <= level <= j_max meeting
    the support, plus the norm of what the computed span misses.

    Levels at or above the grid level carry no content (each h_I there sits
    inside one constant cell) and are skipped.
    """
    j_min, j_max = level_range
    if j_min > j_max:
        raise ValueError(f"Empty level range [{j_min}, {j_max}]")
    if f.is_zero:
        return HaarExpansion(), 0.0

    grid = f.grid_level
    low = int(f.offsets[0])
    dense = np.zeros(int(f.offsets[-1]) + 1 - low)
    dense[f.offsets - low] = f.values

    threshold = config.ANALYSIS_ZERO_TOLERANCE * f.norm()
    terms = []
    for level in range(j_min, min(j_max, grid - 1) + 1):
        half_width = 1 << (grid - level - 1)
        first_half, half_sums = _block_sums(dense, low, half_width)

        # align half-blocks in (left, right) pairs
        if first_half % 2:
            half_sums = np.concatenate(([0.0], half_sums))
            first_half -= 1
        if half_sums.size % 2:
            half_sums = np.concatenate((half_sums, [0.0]))

        pairs = half_sums.reshape(-1, 2)
        scale = haar_amplitude(level) * f.cell_length
        coefficients = scale * (pairs[:, 0] - pairs[:, 1])

        for index in np.flatnonzero(np.abs(coefficients) > threshold):
            terms.append((DyadicInterval(level, first_half // 2 + int(index)), float(coefficients[index])))

    expansion = HaarExpansion(tuple(terms))
    residual_squared = f.norm_squared() - expansion.norm_squared()
    return expansion, math.sqrt(max(residual_squared, 0.0))


class CompleteSpectrum(NamedTuple):
    """Finite Haar content inside the root (0, 2^m] plus the coarse tail determined by the mass."""
    finite: HaarExpansion
    mass: float  # integral of f; coarse coefficients are 2^(-m'/2) * mass for m' > m
    root_exponent: int  # m

    def norm_squared(self) -> float:
        return self.finite.norm_squared() + self.mass ** 2 * math.ldexp(1.0, -self.root_exponent)


def root_exponent(f: DyadicStepFunction) -> int:
    """Smallest m with supp f contained in (0, 2^m]."""
    if not f.offsets.size:
        return 0
    last = int(f.offsets[-1]) + 1
    return (last - 1).bit_length() - f.grid_level


def complete_spectrum(f: DyadicStepFunction) -> CompleteSpectrum:
    """
    Full Haar spectrum of a step function on (0, inf).

    Inside the root (0, 2^m] the expansion is finite; every coarser interval
    (0, 2^m'] holds f in its left half, so its coefficient is 2^(-m'/2) * integral(f).
    """
    m = root_exponent(f)
    if -m > f.grid_level - 1:
        # the root is a single grid cell
        return CompleteSpectrum(HaarExpansion(), f.integral(), m)
    finite, _ = analyze(f, (-m, f.grid_level - 1))
    return CompleteSpectrum(finite, f.integral(), m)
