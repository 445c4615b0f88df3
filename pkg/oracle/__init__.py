"""
Oracle Package

Independent estimators (level-set series, adaptive quadrature, stratified
Monte Carlo) used to certify the exact form evaluators.
"""

from .adaptive import euclid_adaptive_oracle
from .base import IntegralKind, OracleConvergenceError, OracleEstimate
from .series import SeriesKind, dyadic_series_oracle, series_terms
from .stratified import dyadic_stratified_oracle, enclosing_interval

__all__ = [
    'IntegralKind',
    'OracleConvergenceError',
    'OracleEstimate',
    'SeriesKind',
    'dyadic_series_oracle',
    'dyadic_stratified_oracle',
    'enclosing_interval',
    'euclid_adaptive_oracle',
    'series_terms',
]
