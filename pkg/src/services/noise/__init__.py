"""Stochastic field models.

Provides:
- Noise model declarations and their covariance W(t).
- Gaussian trajectory sampling for the Monte Carlo oracle.
"""

from .models import (
    WhiteNoise,
    DiagonalExp,
    SingleAxisExp,
    GeneralStationary,
    NoiseModel,
    covariance_at,
    white_strength,
    damped_cosine_model,
)
from .sampling import FieldTrajectory, sample_trajectory, sample_batch, uniform_grid, step_of

__all__ = [
    'WhiteNoise',
    'DiagonalExp',
    'SingleAxisExp',
    'GeneralStationary',
    'NoiseModel',
    'covariance_at',
    'white_strength',
    'damped_cosine_model',
    'FieldTrajectory',
    'sample_trajectory',
    'sample_batch',
    'uniform_grid',
    'step_of',
]
