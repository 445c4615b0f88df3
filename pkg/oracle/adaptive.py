"""
Semi-analytic quadrature oracle for the Euclidean forms.

For a point x the inner integral over each cell (or over the complement of
x's own cell) has an exact one-dimensional antiderivative; the outer integral
over x is done numerically with adaptive bisection of 5-point Gauss-Legendre
panels. Each half cell is graded toward its outer endpoint with
x = e + h v^k, which turns the |x - e|^(+-2s) endpoint behavior into a
smooth power of v. Points are carried as (anchor, displacement) pairs so
distances to the anchor stay exact however small they get.
"""

import math
import sys

import numpy as np

import config
from dyadic.haar import DyadicStepFunction, canonical_partition
from forms.base import validate_s
from oracle.base import IntegralKind, OracleConvergenceError, OracleEstimate

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(5)
_NODES = (_NODES + 1.0) / 2.0
_WEIGHTS = _WEIGHTS / 2.0

# GL5 is exact to degree 9; halving the panel shrinks the error by 2^10
_RICHARDSON = 2.0 ** 10 - 1.0


class _PanelBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, count: int) -> None:
        self.used += count
        if self.used > self.limit:
            raise OracleConvergenceError(
                f"Adaptive quadrature exceeded {self.limit} panels (ADAPTIVE_PANEL_BUDGET)"
            )


def _panel(func, lo: float, hi: float) -> float:
    return (hi - lo) * float(np.dot(_WEIGHTS, func(lo + (hi - lo) * _NODES)))


def adaptive_integrate(func, tol: float, budget: _PanelBudget) -> tuple[float, float]:
    """
    Integral of a vectorized func over [0, 1] to absolute tolerance tol.

    Returns (value, error estimate). Panels are accepted when the coarse and
    split Gauss values agree within the panel's share of the tolerance; the
    accepted value carries a Richardson correction.
    """
    budget.spend(1)
    stack = [(0.0, 1.0, _panel(func, 0.0, 1.0), tol)]
    total, error = 0.0, 0.0

    while stack:
        lo, hi, coarse, local_tol = stack.pop()
        mid = (lo + hi) / 2
        left, right = _panel(func, lo, mid), _panel(func, mid, hi)
        budget.spend(2)

        fine = left + right
        difference = fine - coarse
        if abs(difference) <= local_tol or mid in (lo, hi):
            total += fine + difference / _RICHARDSON
            error += abs(difference)
        else:
            stack.append((mid, hi, right, local_tol / 2))
            stack.append((lo, mid, left, local_tol / 2))

    return total, error


# ----------------------------------------------------
# Inner integrals for x = anchor + t
# ----------------------------------------------------

def _signed_distances(anchor: float, t: np.ndarray, lefts: np.ndarray, rights: np.ndarray):
    """x - c and d - x for every node (rows) and cell (columns)."""
    from_left = (anchor - lefts)[None, :] + t[:, None]
    to_right = (rights - anchor)[None, :] - t[:, None]
    return from_left, to_right


def _position_inner(s: float, from_left: np.ndarray, to_right: np.ndarray) -> np.ndarray:
    """Integral of |x - y|^(2s-1) over each cell [c, d]."""
    near, far = np.abs(from_left) ** (2 * s), np.abs(to_right) ** (2 * s)
    inside = (from_left > 0) & (to_right > 0)
    left_of_cell = from_left <= 0
    return np.where(inside, near + far, np.where(left_of_cell, far - near, near - far)) / (2 * s)


def _energy_inner(s: float, from_left: np.ndarray, to_right: np.ndarray) -> np.ndarray:
    """Integral of |x - y|^(-1-2s) over each cell [c, d] not containing x."""
    with np.errstate(divide="ignore", invalid="ignore"):
        near, far = np.abs(from_left) ** (-2 * s), np.abs(to_right) ** (-2 * s)
    left_of_cell = from_left <= 0
    return np.where(left_of_cell, near - far, far - near) / (2 * s)


def _cell_integrand(kind: IntegralKind, s: float, i: int, lefts, rights, values):
    """Integrand over x in cell i, as a function of (anchor, displacement)."""
    others = np.arange(values.size) != i
    v_i = values[i]

    def position(anchor, t):
        from_left, to_right = _signed_distances(anchor, t, lefts, rights)
        return v_i * (_position_inner(s, from_left, to_right) @ values)

    def energy(anchor, t):
        from_left, to_right = _signed_distances(anchor, t, lefts, rights)
        inner = _energy_inner(s, from_left[:, others], to_right[:, others])
        weights = (v_i - values[others]) ** 2 - 2 * v_i ** 2

        # complement of the own cell: ((x - a)^-2s + (b - x)^-2s) / 2s
        own = (np.abs(from_left[:, i]) ** (-2 * s) + np.abs(to_right[:, i]) ** (-2 * s)) / (2 * s)
        return inner @ weights + 2 * v_i ** 2 * own

    return position if kind is IntegralKind.POSITION else energy


def _graded_half(integrand, anchor: float, half: float, grading: int):
    """[0, 1] -> half cell starting at anchor (half < 0 runs leftwards)."""
    def func(v):
        t = half * v ** grading
        jacobian = abs(half) * grading * v ** (grading - 1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = integrand(anchor, t) * jacobian
        return np.where(t != 0, out, 0.0)

    return func


# ----------------------------------------------------
# Oracle
# ----------------------------------------------------

def euclid_adaptive_oracle(
    f: DyadicStepFunction,
    kind: IntegralKind,
    s: float,
    tol: float = 1e-8,
) -> OracleEstimate:
    """
    Quadrature estimate of Q_s(|f|) (position) or E_s(f) (energy).

    tol is relative to the size of the result; bound reports the summed
    coarse/split discrepancies of the accepted panels.
    """
    kind = IntegralKind(kind)
    validate_s(s, config.S_ENDPOINT_MARGIN)
    if tol < 1e-8:
        raise ValueError(f"Adaptive oracle tolerance must be >= 1e-8, got {tol}")

    source = f.absolute() if kind is IntegralKind.POSITION else f
    cells, matrix = canonical_partition(source)
    if not cells:
        return OracleEstimate(0.0, 0.0, 0)

    lefts = np.array([float(cell.left) for cell in cells])
    rights = np.array([float(cell.right) for cell in cells])
    values = matrix[:, 0]
    grading = math.ceil(4.0 / (1.0 - 2.0 * s))

    halves = []
    for i in range(len(cells)):
        integrand = _cell_integrand(kind, s, i, lefts, rights, values)
        half = (rights[i] - lefts[i]) / 2
        halves.append(_graded_half(integrand, lefts[i], half, grading))
        halves.append(_graded_half(integrand, rights[i], -half, grading))

    # one panel per half sets the scale the relative tolerance refers to
    scale = abs(sum(_panel(func, 0.0, 1.0) for func in halves))
    target = tol * max(scale, np.finfo(float).tiny) / len(halves)

    budget = _PanelBudget(config.ADAPTIVE_PANEL_BUDGET * len(halves))
    value, error = 0.0, 0.0
    for func in halves:
        part, part_error = adaptive_integrate(func, target, budget)
        value += part
        error += part_error

    print(f"[ORACLE] adaptive {kind.value}: {budget.used} panels, error estimate {error:.3e}", file=sys.stderr)
    return OracleEstimate(value, error, budget.used)
