"""
Euclidean energy and position forms on step functions over the real line.

Every double integral reduces to rectangles C x C' of the kernel |x - y|^p,
evaluated with the double antiderivative F(t) = t^(p+2) / ((p+1)(p+2)).
No quadrature is involved; the only error is double-precision rounding.
"""

import math
from fractions import Fraction
from typing import Union

import numpy as np

import config
from dyadic.core import DivergentIntegralError, GridError
from dyadic.haar import DyadicStepFunction, canonical_partition
from forms.base import FormEvaluation, FormMethod, NormalizationError, require_s, validate_s

Endpoint = Union[float, Fraction]


# ----------------------------------------------------
# Rectangle integrals
# ----------------------------------------------------

def _antiderivative(p: float, t: float) -> float:
    if p == -1.0:
        return t * math.log(t) - t if t > 0 else 0.0
    return t ** (p + 2) / ((p + 1) * (p + 2))


def kernel_rect_integral(
    p: float,
    first: tuple[Endpoint, Endpoint],
    second: tuple[Endpoint, Endpoint],
) -> float:
    """
    Exact value of the double integral of |x - y|^p over [a, b] x [c, d].

    The intervals must be identical or have disjoint interiors. Identical
    intervals need p > -1; disjoint or touching ones need p > -2.
    """
    a, b = first
    c, d = second
    if not (b > a and d > c):
        raise ValueError(f"Intervals must have positive length, got {first} and {second}")
    if not math.isfinite(p) or p <= -2:
        raise DivergentIntegralError(f"Kernel exponent p={p} diverges on touching rectangles")

    if (a, b) == (c, d):
        if p <= -1:
            raise DivergentIntegralError(f"Kernel exponent p={p} diverges on the diagonal")
        return 2.0 * float(b - a) ** (p + 2) / ((p + 1) * (p + 2))

    if c < a:
        (a, b), (c, d) = (c, d), (a, b)
    if c < b:
        raise GridError(f"Intervals {first} and {second} overlap without being identical")

    gap, w1, w2 = float(c - b), float(b - a), float(d - c)
    if p == -1.0 or gap == 0.0:
        F = lambda t: _antiderivative(p, t)
        return F(gap + w1 + w2) - F(gap + w2) - F(gap + w1) + F(gap)

    q = p + 2
    e = lambda u: math.expm1(q * math.log1p(u / gap))
    return _antiderivative(p, gap) * (e(w1 + w2) - e(w1) - e(w2))


def _rect_matrix(p: float, lefts: np.ndarray, rights: np.ndarray) -> np.ndarray:
    """
    kernel_rect_integral for every pair of sorted, non-overlapping cells,
    diagonal included when p > -1 (zero otherwise).
    """
    n = lefts.size
    q = p + 2
    F = lambda t: t ** q / ((p + 1) * q)
    widths = rights - lefts

    i, j = np.triu_indices(n, 1)
    gap = lefts[j] - rights[i]
    w1, w2 = widths[i], widths[j]

    touching = F(w1 + w2) - F(w1) - F(w2)
    safe_gap = np.where(gap > 0, gap, 1.0)
    e = lambda u: np.expm1(q * np.log1p(u / safe_gap))
    separated = F(safe_gap) * (e(w1 + w2) - e(w1) - e(w2))

    matrix = np.zeros((n, n))
    matrix[i, j] = np.where(gap > 0, separated, touching)
    matrix[j, i] = matrix[i, j]
    if p > -1:
        np.fill_diagonal(matrix, 2.0 * F(widths))
    return matrix


def _cell_bounds(cells) -> tuple[np.ndarray, np.ndarray]:
    lefts = np.array([float(cell.left) for cell in cells], dtype=np.float64)
    rights = np.array([float(cell.right) for cell in cells], dtype=np.float64)
    return lefts, rights


# ----------------------------------------------------
# Forms
# ----------------------------------------------------

def position_quadratic(f: DyadicStepFunction, s: float) -> FormEvaluation:
    """Q_s(|f|): sum over ordered cell pairs of |f_C||f_C'| times the |x-y|^(2s-1) rectangle mass."""
    warning = validate_s(s, config.S_ENDPOINT_MARGIN)
    cells, values = canonical_partition(f.absolute())
    if not cells:
        return FormEvaluation(0.0, FormMethod.DIRECT, 0.0, warning)

    lefts, rights = _cell_bounds(cells)
    weights = _rect_matrix(2 * s - 1, lefts, rights)
    v = values[:, 0]
    return FormEvaluation(float(v @ weights @ v), FormMethod.DIRECT, 0.0, warning)


def _zero_set_tails(s: float, lefts: np.ndarray, rights: np.ndarray) -> np.ndarray:
    """For each support cell, the |x-y|^(-1-2s) mass of C x {f = 0}."""
    p = -1 - 2 * s
    scale = 2 * s * (1 - 2 * s)

    # rays (-inf, first left] and [last right, inf)
    left_edge, right_edge = lefts[0], rights[-1]
    tails = ((rights - left_edge) ** (1 - 2 * s) - (lefts - left_edge) ** (1 - 2 * s)) / scale
    tails += ((right_edge - lefts) ** (1 - 2 * s) - (right_edge - rights) ** (1 - 2 * s)) / scale

    # interior gaps between consecutive support cells
    gap_lefts, gap_rights = rights[:-1], lefts[1:]
    open_gaps = gap_rights > gap_lefts
    if np.any(open_gaps):
        bounds_l = np.concatenate((lefts, gap_lefts[open_gaps]))
        bounds_r = np.concatenate((rights, gap_rights[open_gaps]))
        order = np.argsort(bounds_l, kind="stable")
        rank = np.empty_like(order)
        rank[order] = np.arange(order.size)

        combined = _rect_matrix(p, bounds_l[order], bounds_r[order])
        cell_rows = rank[:lefts.size]
        gap_cols = rank[lefts.size:]
        tails += combined[np.ix_(cell_rows, gap_cols)].sum(axis=1)

    return tails


def energy_quadratic(f: DyadicStepFunction, s: float) -> FormEvaluation:
    """
    E_s(f): squared differences against |x-y|^(-1-2s).

    Distinct support cells contribute (f_C - f_C')^2 times their rectangle
    mass; each support cell pairs twice with the zero set (two rays plus every
    interior gap), where the difference is just f_C.
    """
    warning = validate_s(s, config.S_ENDPOINT_MARGIN)
    cells, values = canonical_partition(f)
    if not cells:
        return FormEvaluation(0.0, FormMethod.DIRECT, 0.0, warning)

    lefts, rights = _cell_bounds(cells)
    v = values[:, 0]

    weights = _rect_matrix(-1 - 2 * s, lefts, rights)
    differences = (v[:, None] - v[None, :]) ** 2
    cross = np.sum(differences * weights)
    tails = 2.0 * np.sum(v ** 2 * _zero_set_tails(s, lefts, rights))

    return FormEvaluation(float(cross + tails), FormMethod.DIRECT, 0.0, warning)


# ----------------------------------------------------
# Haar closed forms
# ----------------------------------------------------

def haar_position_euclid_closed(interval, s: float) -> float:
    """Q_s(|h_I|) = |I|^2s / (s (2s + 1))."""
    require_s(s, config.S_ENDPOINT_MARGIN)
    return interval.measure ** (2 * s) / (s * (2 * s + 1))


def haar_energy_euclid_closed(interval, s: float) -> float:
    """E_s(h_I) = (2^(2s+2) - 2) / (s (1 - 2s)) |I|^-2s."""
    require_s(s, config.S_ENDPOINT_MARGIN)
    return (2.0 ** (2 * s + 2) - 2.0) / (s * (1 - 2 * s)) * interval.measure ** (-2 * s)


def euclid_haar_product(s: float) -> float:
    """Q_s(|h|) E_s(h), the same for every Haar function."""
    require_s(s, config.S_ENDPOINT_MARGIN)
    return 2.0 * (2.0 ** (2 * s + 1) - 1.0) / (s * s * (1 - 4 * s * s))


# ----------------------------------------------------
# Variance
# ----------------------------------------------------

def variance(f: DyadicStepFunction) -> float:
    """
    inf over a of the integral of (x - a)^2 |f(x)|^2, attained at the mean.

    Moments are exact per cell; the second moment is taken about the mean to
    avoid cancellation for supports far from the origin.
    """
    if f.is_zero:
        raise NormalizationError("Variance of the zero function is undefined")

    length = f.cell_length
    lefts = f.offsets.astype(np.float64) * length
    rights = lefts + length
    density = f.values ** 2

    mass = np.sum(density) * length
    mean = np.sum(density * (rights ** 2 - lefts ** 2) / 2) / mass
    central = np.sum(density * ((rights - mean) ** 3 - (lefts - mean) ** 3) / 3)
    return float(central)
