"""I (x) Gamma_t on path (x) spin states and spectrum tracking."""

import logging
from typing import List, Tuple

import numpy as np

from src.config.config import DEFAULT_SCAN_STEPS, HERMITICITY_TOL
from src.services.bloch_core import state_eigenvalues
from src.services.generator.params import GeneratorParams
from src.utils.error_utils import ValidationError
from src.utils.linalg import is_hermitian
from .propagator import Propagator, propagator, propagator_series

logger = logging.getLogger(__name__)


def _check_two_qubit(rho2: np.ndarray) -> np.ndarray:
    rho2 = np.asarray(rho2, dtype=complex)
    if rho2.shape != (4, 4):
        raise ValidationError(f"Two-qubit state must be 4x4, got shape {rho2.shape}")
    if not is_hermitian(rho2, HERMITICITY_TOL):
        raise ValidationError("Two-qubit state is not hermitian within tolerance")
    return rho2


def apply_extended(g: Propagator, rho2: np.ndarray) -> np.ndarray:
    """Applies Gamma to every 2x2 spin block of rho2 (path index outer)."""
    out = np.empty((4, 4), dtype=complex)
    for i in range(2):
        for k in range(2):
            out[2 * i:2 * i + 2, 2 * k:2 * k + 2] = g.apply_to_matrix(rho2[2 * i:2 * i + 2, 2 * k:2 * k + 2])
    return out


def evolve_extended(p: GeneratorParams, rho2: np.ndarray, t: float) -> np.ndarray:
    rho2 = _check_two_qubit(rho2)
    return apply_extended(propagator(p, t), rho2)


def scan_grid(horizon: float, steps: int = DEFAULT_SCAN_STEPS) -> np.ndarray:
    if steps < 2:
        raise ValidationError(f"Spectrum scan needs at least 2 grid points, got {steps}")
    if horizon < 0:
        raise ValidationError(f"Horizon must be nonnegative, got {horizon}")
    return np.linspace(0.0, horizon, steps)


def evolve_extended_series(p: GeneratorParams, rho2: np.ndarray, times) -> List[np.ndarray]:
    rho2 = _check_two_qubit(rho2)
    return [apply_extended(g, rho2) for g in propagator_series(p, times)]


def spectrum_series(p: GeneratorParams, rho2: np.ndarray, horizon: float,
                    steps: int = DEFAULT_SCAN_STEPS) -> Tuple[np.ndarray, np.ndarray]:
    """(times, eigenvalues) with eigenvalues of shape (steps, 4), each row descending."""
    times = scan_grid(horizon, steps)
    spectra = np.array([state_eigenvalues(s) for s in evolve_extended_series(p, rho2, times)])
    return times, spectra


def spectrum_minimum(p: GeneratorParams, rho2: np.ndarray, horizon: float,
                     steps: int = DEFAULT_SCAN_STEPS) -> Tuple[float, float]:
    """(smallest eigenvalue over the grid, time where it occurs)."""
    times, spectra = spectrum_series(p, rho2, horizon, steps)
    minima = spectra[:, -1]
    k = int(np.argmin(minima))
    if minima[k] < -1e-10:
        logger.info(f"Evolved state leaves the physical cone: eigenvalue {minima[k]:.6g} at t={times[k]:.6g}")
    return float(minima[k]), float(times[k])
