"""
Forms Package

Dyadic and Euclidean fractional energy / position forms and their closed-form
Haar values.
"""

from .base import (
    FormEvaluation,
    FormMethod,
    NormalizationError,
    ParameterRangeError,
    require_s,
    validate_s,
)
from .dyadic_forms import (
    energy_bilinear_direct,
    energy_direct,
    energy_spectral,
    energy_spectral_complete,
    gamma1,
    gamma2,
    haar_energy_closed,
    haar_position_closed,
    position_bilinear_direct,
    position_direct,
    position_spectral,
    position_spectral_complete,
)
from .euclid_forms import (
    energy_quadratic,
    euclid_haar_product,
    haar_energy_euclid_closed,
    haar_position_euclid_closed,
    kernel_rect_integral,
    position_quadratic,
    variance,
)

__all__ = [
    'FormEvaluation',
    'FormMethod',
    'NormalizationError',
    'ParameterRangeError',
    'energy_bilinear_direct',
    'energy_direct',
    'energy_quadratic',
    'energy_spectral',
    'energy_spectral_complete',
    'euclid_haar_product',
    'gamma1',
    'gamma2',
    'haar_energy_closed',
    'haar_energy_euclid_closed',
    'haar_position_closed',
    'haar_position_euclid_closed',
    'kernel_rect_integral',
    'position_bilinear_direct',
    'position_direct',
    'position_quadratic',
    'position_spectral',
    'position_spectral_complete',
    'require_s',
    'validate_s',
    'variance',
]
