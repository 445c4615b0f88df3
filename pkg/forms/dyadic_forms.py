"""
Dyadic energy and position forms E_s and Q_s (kernel powers of delta).

Two independent evaluation paths:
- direct: exact double integration over the canonical dyadic partition.
  delta is constant on C x C' for disjoint cells, same-cell pairs are a
  closed geometric series, and pairs leaving the support are the closed
  complement integral of each cell.
- spectral: the diagonal Haar-coefficient formulas gamma1 sum |I|^2s c_I^2
  and gamma2 sum |I|^-2s c_I^2 (finite expansions, or complete spectra of
  step functions with their coarse tail summed in closed form).
"""

import math

import numpy as np

import config
from dyadic.core import DyadicInterval, cell_distance_matrix
from dyadic.haar import CompleteSpectrum, DyadicStepFunction, HaarExpansion, canonical_partition
from forms.base import FormEvaluation, FormMethod, require_s, validate_s


# ----------------------------------------------------
# Closed-form constants
# ----------------------------------------------------

def gamma1(s: float) -> float:
    """(2^(1-2s) - 1) / (2 (1 - 2^-2s)), the Haar position constant."""
    require_s(s)
    return math.expm1((1 - 2 * s) * math.log(2)) / (-2 * math.expm1(-2 * s * math.log(2)))


def gamma2(s: float) -> float:
    """(2 - 2^-2s) / (1 - 2^-2s), the Haar energy constant."""
    require_s(s)
    value = 1.0 + 1.0 / -math.expm1(-2 * s * math.log(2))
    return value * config.GAMMA2_FAULT_FACTOR


def haar_position_closed(interval: DyadicInterval, s: float) -> float:
    return gamma1(s) * interval.measure ** (2 * s)


def haar_energy_closed(interval: DyadicInterval, s: float) -> float:
    return gamma2(s) * interval.measure ** (-2 * s)


def _intra_cell_factor(s: float) -> float:
    # integral of delta^(2s-1) over a cell of length 1, seen from any of its points
    return 1.0 / (-2 * math.expm1(-2 * s * math.log(2)))


def _exterior_factor(s: float) -> float:
    # integral of delta^(-1-2s) outside a cell of length 1, seen from any of its points
    return 2.0 ** (-2 * s) / (-2 * math.expm1(-2 * s * math.log(2)))


# ----------------------------------------------------
# Direct path
# ----------------------------------------------------

def _partition_geometry(cells: list[DyadicInterval]) -> tuple[np.ndarray, np.ndarray]:
    lengths = np.array([cell.measure for cell in cells], dtype=np.float64)
    return lengths, cell_distance_matrix(cells)


def position_bilinear_direct(f: DyadicStepFunction, g: DyadicStepFunction, s: float) -> FormEvaluation:
    """
    Q_s(f, g) = sum over cell pairs of f_C g_C' times the delta^(2s-1) mass of C x C'.
    """
    warning = validate_s(s)
    cells, values = canonical_partition(f, g)
    if not cells:
        return FormEvaluation(0.0, FormMethod.DIRECT, 0.0, warning)

    f_values, g_values = values[:, 0], values[:, 1]
    lengths, distances = _partition_geometry(cells)

    with np.errstate(divide="ignore"):
        kernel = np.where(distances > 0, distances ** (2 * s - 1), 0.0)
    weights = kernel * np.outer(lengths, lengths)

    cross = f_values @ weights @ g_values
    diagonal = np.sum(f_values * g_values * lengths ** (2 * s + 1)) * _intra_cell_factor(s)
    return FormEvaluation(float(cross + diagonal), FormMethod.DIRECT, 0.0, warning)


def energy_bilinear_direct(f: DyadicStepFunction, g: DyadicStepFunction, s: float) -> FormEvaluation:
    """
    E_s(f, g) over the canonical partition.

    Distinct support cells contribute (f_C - f_C')(g_C - g_C') delta^(-1-2s)
    |C||C'|; each cell also pairs (twice, by symmetry) with the zero set,
    whose delta^(-1-2s) mass is the cell's complement integral minus what the
    other support cells already account for.
    """
    warning = validate_s(s)
    cells, values = canonical_partition(f, g)
    if not cells:
        return FormEvaluation(0.0, FormMethod.DIRECT, 0.0, warning)

    f_values, g_values = values[:, 0], values[:, 1]
    lengths, distances = _partition_geometry(cells)

    with np.errstate(divide="ignore"):
        kernel = np.where(distances > 0, distances ** (-1 - 2 * s), 0.0)
    weights = kernel * np.outer(lengths, lengths)

    f_diff = f_values[:, None] - f_values[None, :]
    g_diff = g_values[:, None] - g_values[None, :]
    cross = np.sum(f_diff * g_diff * weights)

    complement = _exterior_factor(s) * lengths ** (1 - 2 * s)
    exterior = complement - weights.sum(axis=1)
    tails = 2.0 * np.sum(f_values * g_values * exterior)

    return FormEvaluation(float(cross + tails), FormMethod.DIRECT, 0.0, warning)


def position_direct(f: DyadicStepFunction, s: float) -> FormEvaluation:
    return position_bilinear_direct(f, f, s)


def energy_direct(f: DyadicStepFunction, s: float) -> FormEvaluation:
    return energy_bilinear_direct(f, f, s)


# ----------------------------------------------------
# Spectral path
# ----------------------------------------------------

def position_spectral(expansion: HaarExpansion, s: float) -> FormEvaluation:
    warning = validate_s(s)
    if not len(expansion):
        return FormEvaluation(0.0, FormMethod.SPECTRAL, 0.0, warning)

    weights = expansion.measures ** (2 * s)
    value = gamma1(s) * float(np.sum(expansion.coefficients ** 2 * weights))
    return FormEvaluation(value, FormMethod.SPECTRAL, 0.0, warning)


def energy_spectral(expansion: HaarExpansion, s: float) -> FormEvaluation:
    warning = validate_s(s)
    if not len(expansion):
        return FormEvaluation(0.0, FormMethod.SPECTRAL, 0.0, warning)

    weights = expansion.measures ** (-2 * s)
    value = gamma2(s) * float(np.sum(expansion.coefficients ** 2 * weights))
    return FormEvaluation(value, FormMethod.SPECTRAL, 0.0, warning)


def _coarse_tail(spectrum: CompleteSpectrum, exponent: float) -> float:
    """sum over m' > m of 2^(-m' exponent), times the squared mass."""
    first = spectrum.root_exponent + 1
    geometric = 2.0 ** (-first * exponent) / -math.expm1(-exponent * math.log(2))
    return spectrum.mass ** 2 * geometric


def position_spectral_complete(spectrum: CompleteSpectrum, s: float) -> FormEvaluation:
    """Spectral Q_s of a step function, including its coarse ancestors (0, 2^m']."""
    finite = position_spectral(spectrum.finite, s)
    value = finite.value + gamma1(s) * _coarse_tail(spectrum, 1 - 2 * s)
    return FormEvaluation(value, FormMethod.SPECTRAL, 0.0, finite.warning)


def energy_spectral_complete(spectrum: CompleteSpectrum, s: float) -> FormEvaluation:
    """Spectral E_s of a step function, including its coarse ancestors (0, 2^m']."""
    finite = energy_spectral(spectrum.finite, s)
    value = finite.value + gamma2(s) * _coarse_tail(spectrum, 1 + 2 * s)
    return FormEvaluation(value, FormMethod.SPECTRAL, 0.0, finite.warning)
