"""
Harness Package

Uncertainty products, random wave functions, the shifted-grid witness and
parameter sweeps.
"""

from .generators import random_haar_function, random_step_function, random_wave_function
from .sweep import SweepResult, Theorem, TrialResult, run_trials, summarize
from .sweep_config import SweepConfig
from .uncertainty import (
    REPORT_COLUMNS,
    UncertaintyMethod,
    UncertaintyReport,
    dyadic_uncertainty,
    dyadic_uncertainty_step,
    euclid_uncertainty,
    gamma,
)
from .witness import OriginMode, WitnessRecord, shifted_grid_witness

__all__ = [
    'REPORT_COLUMNS',
    'OriginMode',
    'SweepConfig',
    'SweepResult',
    'Theorem',
    'TrialResult',
    'UncertaintyMethod',
    'UncertaintyReport',
    'WitnessRecord',
    'dyadic_uncertainty',
    'dyadic_uncertainty_step',
    'euclid_uncertainty',
    'gamma',
    'random_haar_function',
    'random_step_function',
    'random_wave_function',
    'run_trials',
    'shifted_grid_witness',
    'summarize',
]
