"""Gaussian field trajectories for the stochastic oracle.

Exponential models are sampled as stationary Ornstein-Uhlenbeck processes with
the exact one-step transition. White noise is replaced by an OU surrogate with a
short correlation time and matched integrated strength. General stationary
covariances use a symmetric square root of the block-Toeplitz grid covariance.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from src.config.config import WHITE_NOISE_TAU_STEPS
from src.utils.error_utils import UnsupportedVariantError, ValidationError
from src.utils.seeding import trajectory_seed
from .models import (
    DiagonalExp,
    GeneralStationary,
    NoiseModel,
    SingleAxisExp,
    WhiteNoise,
    covariance_at,
)

logger = logging.getLogger(__name__)

_DENSE_WARN_SIZE = 3000


@dataclass(frozen=True, eq=False)
class FieldTrajectory:
    """Sampled V(t) on a uniform grid; values has shape (len(times), 3)."""
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        step_of(self.times)
        if self.values.shape != (len(self.times), 3):
            raise ValidationError(
                f"Field values have shape {self.values.shape}, expected ({len(self.times)}, 3)")

    @property
    def step(self) -> float:
        return step_of(self.times)


def uniform_grid(horizon: float, step: float) -> np.ndarray:
    """Grid 0, h, 2h, ... covering [0, horizon] (last point rounded to the horizon)."""
    if step <= 0 or horizon <= 0:
        raise ValidationError(f"Grid needs positive step and horizon (step={step}, horizon={horizon})")
    n = max(1, int(round(horizon / step)))
    return np.linspace(0.0, n * step, n + 1)


def step_of(grid: Sequence[float]) -> float:
    """Step of a uniform, strictly increasing grid; raises ValidationError otherwise."""
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise ValidationError("Time grid needs at least two points")
    diffs = np.diff(grid)
    h = float(diffs[0])
    if h <= 0 or np.any(diffs <= 0):
        raise ValidationError("Time grid must be strictly increasing")
    if np.max(np.abs(diffs - h)) > 1e-9 * max(1.0, abs(h)):
        raise ValidationError("Time grid is not uniform")
    return h


def _ou_components(model: NoiseModel, h: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(rates, stationary variances, basis) with V = x @ basis.T for independent OU x."""
    if isinstance(model, DiagonalExp):
        rates = np.array([model.lam, model.lam, model.mu])
        variances = np.array([model.w1, model.w1, model.w3])
        return rates, variances, np.eye(3)
    if isinstance(model, SingleAxisExp):
        rates = np.full(3, model.lam)
        variances = np.array([model.w, 0.0, 0.0])
        return rates, variances, np.eye(3)
    if isinstance(model, WhiteNoise):
        tau_c = WHITE_NOISE_TAU_STEPS * h
        strengths, basis = np.linalg.eigh(model.strength)
        strengths = np.clip(strengths, 0.0, None)
        rates = np.full(3, 1.0 / tau_c)
        return rates, strengths / (2.0 * tau_c), basis
    raise UnsupportedVariantError(f"No OU representation for {type(model).__name__}")


def _ou_paths(model: NoiseModel, h: float, z: np.ndarray) -> np.ndarray:
    """Maps standard normals z of shape (batch, n, 3) to field values of the same shape."""
    rates, variances, basis = _ou_components(model, h)
    decay = np.exp(-rates * h)
    innovation = np.sqrt(variances * (1.0 - decay ** 2))
    x = np.empty_like(z)
    x[:, 0, :] = np.sqrt(variances) * z[:, 0, :]
    for k in range(1, z.shape[1]):
        x[:, k, :] = decay * x[:, k - 1, :] + innovation * z[:, k, :]
    return x @ basis.T


@lru_cache(maxsize=8)
def _stationary_root(model: GeneralStationary, n: int, h: float) -> np.ndarray:
    """Symmetric square root of the (3n x 3n) covariance of the sampled grid, time-major."""
    size = 3 * n
    if size > _DENSE_WARN_SIZE:
        logger.warning(f"Dense covariance root of size {size}; sampling a {model.label} model on this grid is slow")
    lags = [covariance_at(model, k * h) for k in range(n)]
    cov = np.empty((size, size))
    for a in range(n):
        for b in range(n):
            block = lags[a - b] if a >= b else lags[b - a].T
            cov[3 * a:3 * a + 3, 3 * b:3 * b + 3] = block
    w, v = np.linalg.eigh(0.5 * (cov + cov.T))
    if w.min() < -1e-10 * max(1.0, w.max()):
        logger.warning(f"Grid covariance of {model.label} model has eigenvalue {w.min():.3e}; clamped to zero")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    root.setflags(write=False)
    return root


def _field_from_normals(model: NoiseModel, h: float, z: np.ndarray) -> np.ndarray:
    if isinstance(model, GeneralStationary):
        batch, n, _ = z.shape
        root = _stationary_root(model, n, h)
        return (z.reshape(batch, 3 * n) @ root.T).reshape(batch, n, 3)
    return _ou_paths(model, h, z)


def _normals(seed: int, n: int) -> np.ndarray:
    return np.random.default_rng(seed).standard_normal((n, 3))


def sample_trajectory(model: NoiseModel, grid: Sequence[float], seed: int) -> FieldTrajectory:
    """One field realization; deterministic for fixed (model, grid, seed)."""
    grid = np.asarray(grid, dtype=float)
    h = step_of(grid)
    z = _normals(seed, grid.size)[np.newaxis]
    values = _field_from_normals(model, h, z)[0]
    return FieldTrajectory(times=grid, values=values)


def sample_batch(model: NoiseModel, grid: Sequence[float], master_seed: int,
                 indices: Sequence[int]) -> np.ndarray:
    """Fields for trajectory indices, shape (len(indices), len(grid), 3).

    Row k equals sample_trajectory(model, grid, trajectory_seed(master_seed, indices[k])).values.
    """
    grid = np.asarray(grid, dtype=float)
    h = step_of(grid)
    z = np.stack([_normals(trajectory_seed(master_seed, i), grid.size) for i in indices])
    return _field_from_normals(model, h, z)
