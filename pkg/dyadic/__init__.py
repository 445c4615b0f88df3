from dyadic.core import (
    ORIGIN,
    DivergentCase,
    DivergentIntegralError,
    DyadicInterval,
    DyadicRational,
    GridError,
    GridOrigin,
    ball_level,
    cell_distance_matrix,
    contains,
    divergence_terms,
    divergence_witness,
    dyadic_ball,
    dyadic_distance,
    integral_ball_power,
    integral_complement_power,
    level_set_measure,
    to_dyadic,
)
from dyadic.haar import (
    CompleteSpectrum,
    DyadicStepFunction,
    HaarExpansion,
    analyze,
    canonical_partition,
    complete_spectrum,
    haar_amplitude,
    haar_eval,
    inner_product,
    synthesize,
)
from dyadic.io import InputFormatError, load_wave_function, parse_wave_function

__all__ = [
    "ORIGIN",
    "CompleteSpectrum",
    "DivergentCase",
    "DivergentIntegralError",
    "DyadicInterval",
    "DyadicRational",
    "DyadicStepFunction",
    "GridError",
    "GridOrigin",
    "HaarExpansion",
    "InputFormatError",
    "analyze",
    "ball_level",
    "canonical_partition",
    "cell_distance_matrix",
    "complete_spectrum",
    "contains",
    "divergence_terms",
    "divergence_witness",
    "dyadic_ball",
    "dyadic_distance",
    "haar_amplitude",
    "haar_eval",
    "inner_product",
    "integral_ball_power",
    "integral_complement_power",
    "level_set_measure",
    "load_wave_function",
    "parse_wave_function",
    "synthesize",
    "to_dyadic",
]
