"""
Exact dyadic geometry on the positive half-line.

Provides:
- DyadicInterval / DyadicRational / GridOrigin value types
- The dyadic metric delta (optionally on a grid shifted by x0)
- delta-balls, delta level-set measures and the closed-form delta integrals
- Divergence witnesses for the exponent regimes where those integrals blow up

Intervals are left-open and right-closed, (k 2^-j, (k+1) 2^-j]. All boundary
decisions go through exact Fraction arithmetic; floats only appear in
returned measures, which are powers of two and therefore exact as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union

import numpy as np

import config


class GridError(ValueError):
    """A point, shift or interval pair is incompatible with the dyadic grid."""


class DivergentIntegralError(ValueError):
    """The requested delta integral diverges for this exponent."""


RealLike = Union[int, float, Fraction, "DyadicRational"]


# ----------------------------------------------------
# Value types
# ----------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """The exact value numerator * 2^-exponent, kept with an odd numerator (or 0)."""

    numerator: int
    exponent: int

    def __post_init__(self):
        if self.numerator < 0:
            raise GridError(f"DyadicRational numerator must be >= 0, got {self.numerator}")

        numerator, exponent = self.numerator, self.exponent
        if numerator == 0:
            exponent = 0
        else:
            trailing = (numerator & -numerator).bit_length() - 1
            numerator >>= trailing
            exponent -= trailing

        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    @classmethod
    def from_value(cls, value: RealLike, resolution: int | None = None) -> "DyadicRational":
        exact = to_dyadic(value, resolution)
        if exact < 0:
            raise GridError(f"DyadicRational requires a non-negative value, got {value}")
        return cls(exact.numerator, exact.denominator.bit_length() - 1)

    def as_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.numerator, 1 << self.exponent)
        return Fraction(self.numerator << -self.exponent)

    def cell_index(self, level: int) -> int:
        """Offset k of the level-j interval (k 2^-j, (k+1) 2^-j] holding this value."""
        if self.numerator == 0:
            raise GridError("Zero lies left of every grid interval")
        if self.exponent <= level:
            return (self.numerator << (level - self.exponent)) - 1
        return (self.numerator - 1) >> (self.exponent - level)

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __lt__(self, other) -> bool:
        return self.as_fraction() < _as_fraction(other)


@dataclass(frozen=True, order=True)
class DyadicInterval:
    """
    The dyadic interval I = (k 2^-j, (k+1) 2^-j] with level j and offset k >= 0.

    Ordering is by (level, offset), which is the deterministic iteration order
    used by every coefficient map in the package.
    """

    level: int
    offset: int

    def __post_init__(self):
        if self.offset < 0:
            raise GridError(f"Dyadic offsets must be >= 0, got {self.offset}")

    @property
    def measure(self) -> float:
        return math.ldexp(1.0, -self.level)

    @property
    def left(self) -> Fraction:
        return _scale(self.offset, self.level)

    @property
    def right(self) -> Fraction:
        return _scale(self.offset + 1, self.level)

    def parent(self) -> "DyadicInterval":
        return DyadicInterval(self.level - 1, self.offset >> 1)

    def children(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        return (
            DyadicInterval(self.level + 1, 2 * self.offset),
            DyadicInterval(self.level + 1, 2 * self.offset + 1),
        )

    def ancestor(self, level: int) -> "DyadicInterval":
        if level > self.level:
            raise GridError(f"Level {level} is finer than {self}")
        return DyadicInterval(level, self.offset >> (self.level - level))

    def contains_interval(self, other: "DyadicInterval") -> bool:
        return other.level >= self.level and other.ancestor(self.level) == self

    def to_dict(self) -> dict:
        return {"j": self.level, "k": self.offset}


@dataclass(frozen=True)
class GridOrigin:
    """Origin x0 of the shifted grid D_{x0} = x0 + D."""

    x0: Fraction = Fraction(0)

    @classmethod
    def of(cls, value: RealLike = 0) -> "GridOrigin":
        return cls(_as_fraction(value))

    def local(self, x: RealLike) -> Fraction:
        """Exact coordinate of x relative to the shifted origin."""
        return _as_fraction(x) - self.x0


ORIGIN = GridOrigin()


# ----------------------------------------------------
# Exact conversion helpers
# ----------------------------------------------------

def _scale(numerator: int, level: int) -> Fraction:
    if level >= 0:
        return Fraction(numerator, 1 << level)
    return Fraction(numerator << -level)


def grid_point(offset: int, level: int) -> Fraction:
    """The exact grid point offset * 2^-level."""
    return _scale(offset, level)


def _as_fraction(value: RealLike) -> Fraction:
    if isinstance(value, DyadicRational):
        return value.as_fraction()
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float) and not math.isfinite(value):
        raise GridError(f"Dyadic arithmetic requires finite inputs, got {value}")
    return Fraction(value)


def to_dyadic(value: RealLike, resolution: int | None = None) -> Fraction:
    """
    Convert a real input to an exact dyadic Fraction.

    Dyadic values with at most `resolution` binary digits are returned
    unchanged. Anything finer (or non-dyadic) is snapped to the right endpoint
    of its finest grid cell, which keeps it inside every interval of level
    <= resolution that contained it.
    """
    resolution = config.DYADIC_RESOLUTION if resolution is None else resolution
    exact = _as_fraction(value)

    denominator = exact.denominator
    is_dyadic = denominator & (denominator - 1) == 0
    if is_dyadic and denominator.bit_length() - 1 <= resolution:
        return exact

    return Fraction(math.ceil(exact * (1 << resolution)), 1 << resolution)


def interval_index(x: RealLike, level: int) -> int:
    """Offset k of the level-j interval containing x (x > 0)."""
    exact = _as_fraction(x)
    if exact <= 0:
        raise GridError(f"Point {x} lies left of the grid origin")
    return math.ceil(exact * _scale(1, -level)) - 1


# ----------------------------------------------------
# Operations
# ----------------------------------------------------

def contains(interval: DyadicInterval, x: RealLike) -> bool:
    """True iff k 2^-j < x <= (k+1) 2^-j, decided exactly."""
    exact = _as_fraction(x)
    return interval.left < exact <= interval.right


def dyadic_distance(
    x: RealLike,
    y: RealLike,
    origin: GridOrigin = ORIGIN,
    resolution: int | None = None,
) -> float:
    """
    Measure of the smallest dyadic interval of the (shifted) grid containing x and y.

    Both points are snapped to DyadicRational cells at the resolution level; the common
    ancestor is then given by the shared binary prefix of their cell indices.
    """
    resolution = config.DYADIC_RESOLUTION if resolution is None else resolution

    u, v = origin.local(x), origin.local(y)
    if u <= 0 or v <= 0:
        raise GridError(f"Points must lie right of the grid origin {origin.x0}, got {x}, {y}")

    if u == v:
        return 0.0

    index_u = DyadicRational.from_value(u, resolution).cell_index(resolution)
    index_v = DyadicRational.from_value(v, resolution).cell_index(resolution)

    # distinct points sharing the finest cell
    if index_u == index_v:
        return math.ldexp(1.0, -resolution)

    shared = (index_u ^ index_v).bit_length()
    return math.ldexp(1.0, shared - resolution)


def ball_level(r: RealLike) -> int:
    """Smallest level j with 2^-j < r."""
    radius = _as_fraction(r)
    if radius <= 0:
        raise GridError(f"Ball radius must be positive, got {r}")

    exponent = radius.numerator.bit_length() - radius.denominator.bit_length()
    if _scale(1, -exponent) > radius:
        exponent -= 1

    # now 2^exponent <= r < 2^(exponent+1)
    if _scale(1, -exponent) == radius:
        return -exponent + 1
    return -exponent


def dyadic_ball(x: RealLike, r: RealLike, origin: GridOrigin = ORIGIN) -> DyadicInterval:
    """
    The delta-ball {y : delta(x, y) < r}: the largest dyadic interval containing x
    with measure strictly less than r. Offsets are relative to the origin.
    """
    level = ball_level(r)
    return DyadicInterval(level, interval_index(origin.local(x), level))


def level_set_measure(interval: DyadicInterval, k: int) -> float:
    """
    Measure of a delta level set around a point x of `interval`.

    k >= 1: {y outside I : delta(x, y) = 2^k |I|}, the sibling of the
    (k-1)-th ancestor. k <= 0: {y in I : delta(x, y) = 2^k |I|}, the other
    half of the level-(j-k) interval containing x. Both equal 2^(k-1) |I|.
    """
    return math.ldexp(interval.measure, k - 1)


def _require_convergent(alpha: float) -> None:
    if not math.isfinite(alpha) or alpha <= 0:
        raise DivergentIntegralError(
            f"Exponent alpha must be positive for a convergent delta integral, got {alpha}"
        )


def integral_ball_power(alpha: float, interval: DyadicInterval) -> float:
    """Integral over the ball I(x, r) of delta(x, y)^(alpha - 1) dy."""
    _require_convergent(alpha)
    return interval.measure ** alpha / (2.0 * (1.0 - 2.0 ** -alpha))


def integral_complement_power(alpha: float, interval: DyadicInterval) -> float:
    """Integral outside the ball I(x, r) of delta(x, y)^(-1 - alpha) dy."""
    _require_convergent(alpha)
    return 2.0 ** -alpha * interval.measure ** -alpha / (2.0 * (1.0 - 2.0 ** -alpha))


class DivergentCase(Enum):
    """Exponent regimes in which a delta integral is +infinity."""
    BALL_INVERSE_POWER = "ball_inverse_power"  # delta^(-1-alpha) over the ball
    COMPLEMENT_POSITIVE_POWER = "complement_positive_power"  # delta^(alpha-1) off the ball
    LOGARITHMIC = "logarithmic"  # delta^-1 on either side


def divergence_terms(
    case: DivergentCase,
    alpha: float = 0.5,
    terms: int = 64,
    interval: DyadicInterval = DyadicInterval(0, 0),
) -> np.ndarray:
    """First level-set series terms of a divergent delta integral."""
    case = DivergentCase(case)
    k = np.arange(terms, dtype=np.float64)
    size = interval.measure

    if case is DivergentCase.BALL_INVERSE_POWER:
        # shells inside the ball: (2^-k |I|)^(-1-alpha) * 2^(-k-1) |I|
        return 0.5 * np.exp2(k * alpha) * size ** -alpha
    if case is DivergentCase.COMPLEMENT_POSITIVE_POWER:
        # shells outside the ball: (2^k |I|)^(alpha-1) * 2^(k-1) |I|, k >= 1
        return 0.5 * np.exp2((k + 1) * alpha) * size ** alpha
    return np.full(terms, 0.5)


def divergence_witness(case: DivergentCase, alpha: float = 0.5, terms: int = 64) -> bool:
    """
    True when the level-set series of `case` diverges: its terms are
    non-decreasing and bounded away from zero, so partial sums grow at least linearly.
    """
    series = divergence_terms(case, alpha, terms)
    return bool(series[0] > 0 and np.all(np.diff(series) >= 0))


def cell_distance_matrix(cells: Sequence[DyadicInterval]) -> np.ndarray:
    """
    delta between every pair of pairwise disjoint dyadic cells (0 on the diagonal).

    delta is constant on C x C' for disjoint C, C'; it is the measure of their
    smallest common ancestor, read off the shared prefix of the cells'
    first sub-cell indices at the finest level present.
    """
    if not cells:
        return np.zeros((0, 0))

    finest = max(cell.level for cell in cells)
    anchors = [cell.offset << (finest - cell.level) for cell in cells]

    if max(anchors).bit_length() < 53:
        packed = np.asarray(anchors, dtype=np.int64)
        xor = np.bitwise_xor.outer(packed, packed)
        # frexp exponent equals bit_length for integers below 2^53
        _, shared = np.frexp(xor.astype(np.float64))
    else:
        packed = np.asarray(anchors, dtype=object)
        xor = np.bitwise_xor.outer(packed, packed)
        shared = np.vectorize(int.bit_length, otypes=[np.int64])(xor)

    distances = np.ldexp(1.0, shared.astype(np.int64) - finest)
    np.fill_diagonal(distances, 0.0)
    return distances
