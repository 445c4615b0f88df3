"""
Shifted-grid witness: the chain that carries the dyadic inequality to the line.

Pick x0 with at least 1 - epsilon of the L2 mass to its right, restrict f to
(x0, inf), and read the restriction on the grid x0 + D. Because
|x - y| <= delta_x0(x, y) there, every Euclidean form dominates its shifted
dyadic counterpart, so

    Q_s(|f|) E_s(f) >= Q^delta(f^x0) E^delta(f^x0) >= gamma ||f^x0||^4 >= gamma (1 - eps)^2.

Each link is evaluated and checked separately.
"""

from enum import Enum
from fractions import Fraction
from typing import NamedTuple

import numpy as np

import config
from dyadic.core import grid_point
from dyadic.haar import DyadicStepFunction
from forms.dyadic_forms import energy_direct, position_direct
from forms.euclid_forms import energy_quadratic, position_quadratic
from harness.uncertainty import gamma, require_normalized


class OriginMode(Enum):
    """
    How x0 is chosen.
    """
    SUPPORT = "support"  # left end of the support; captures all of the mass
    QUANTILE = "quantile"  # rightmost grid point with at most epsilon of the mass to its left


class WitnessRecord(NamedTuple):
    x0: Fraction
    mass_captured: float
    dyadic_position: float
    dyadic_energy: float
    dyadic_product: float
    euclid_position: float
    euclid_energy: float
    euclid_product: float
    chain: dict  # link name -> holds
    domination_holds: bool


def _at_least(larger: float, smaller: float) -> bool:
    return larger >= smaller - config.SLACK_TOLERANCE * max(abs(larger), abs(smaller))


def select_origin(f: DyadicStepFunction, epsilon: float, mode: OriginMode) -> Fraction:
    """Grid point x0 of f's grid with mass(f on (x0, inf)) >= 1 - epsilon."""
    mode = OriginMode(mode)
    offsets = f.offsets
    if mode is OriginMode.SUPPORT:
        return grid_point(int(offsets[0]), f.grid_level)

    mass_left = np.concatenate(([0.0], np.cumsum(f.values ** 2 * f.cell_length)))[:-1]
    eligible = np.flatnonzero(mass_left <= epsilon)
    return grid_point(int(offsets[eligible[-1]]), f.grid_level)


def shifted_grid_witness(
    f: DyadicStepFunction,
    s: float,
    epsilon: float,
    mode: OriginMode = OriginMode.SUPPORT,
) -> WitnessRecord:
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    require_normalized(f)

    x0 = select_origin(f, epsilon, mode)
    restricted = f.restricted_right(x0)
    local = restricted.translated(-x0)

    dyadic_position = position_direct(local, s).value
    dyadic_position_abs = position_direct(local.absolute(), s).value
    dyadic_energy = energy_direct(local, s).value
    dyadic_product = dyadic_position * dyadic_energy

    euclid_position = position_quadratic(f, s).value
    euclid_energy = energy_quadratic(f, s).value
    euclid_product = euclid_position * euclid_energy

    mass = restricted.norm_squared()
    bound = gamma(s)
    floor = bound * (1.0 - epsilon) ** 2

    chain = {
        "mass": mass >= 1.0 - epsilon - config.NORMALIZATION_TOLERANCE,
        "dyadic_theorem": _at_least(dyadic_product, bound * mass ** 2),
        "dyadic_floor": _at_least(dyadic_product, floor),
        "position_domination": _at_least(euclid_position, dyadic_position_abs)
        and _at_least(dyadic_position_abs, dyadic_position),
        "energy_domination": _at_least(euclid_energy, dyadic_energy),
        "euclid_floor": _at_least(euclid_product, floor),
    }

    return WitnessRecord(
        x0=x0,
        mass_captured=mass,
        dyadic_position=dyadic_position,
        dyadic_energy=dyadic_energy,
        dyadic_product=dyadic_product,
        euclid_position=euclid_position,
        euclid_energy=euclid_energy,
        euclid_product=euclid_product,
        chain=chain,
        domination_holds=all(chain.values()),
    )
