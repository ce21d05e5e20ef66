"""Fixed-step RK4 integration of the stochastic Liouville-von Neumann equation.

For H(t) = (omega0/2) sigma_3 + V(t).sigma the Bloch vector of one realization
obeys dr/dt = 2 B(t) x r with B = V + (0, 0, omega0/2). Stage fields are the
grid values at the step ends and their average at the midpoint. After every
step the Bloch vector is rescaled to its initial length, so each step is a
rotation and the purity of Sigma(t) is conserved to rounding.
"""

import logging
from typing import Sequence

import numpy as np

from src.config.config import RK4_STABILITY_LIMIT
from src.services.bloch_core import to_bloch
from src.services.noise.sampling import FieldTrajectory, step_of
from src.utils.error_utils import StepSizeError, ValidationError

logger = logging.getLogger(__name__)


def check_step(omega0: float, step: float, max_field: float):
    """Raises StepSizeError when h * (omega0 + 2 max|V|) exceeds the stability limit."""
    load = step * (abs(omega0) + 2.0 * max_field)
    if load > RK4_STABILITY_LIMIT:
        raise StepSizeError(
            f"RK4 step {step:.4g} too large: h*(omega0 + 2 max|V|) = {load:.4g} > {RK4_STABILITY_LIMIT}")


def _rhs(b: np.ndarray, r: np.ndarray) -> np.ndarray:
    return 2.0 * np.cross(b, r)


def integrate_bloch_batch(omega0: float, step: float, fields: np.ndarray, r0: Sequence[float]) -> np.ndarray:
    """Spatial Bloch trajectories for a batch of fields.

    fields has shape (batch, n, 3) on a uniform grid of spacing `step`; the
    result has shape (batch, n, 3) and starts at r0 for every realization.
    """
    fields = np.asarray(fields, dtype=float)
    if fields.ndim != 3 or fields.shape[2] != 3:
        raise ValidationError(f"Field batch must have shape (batch, n, 3), got {fields.shape}")
    batch, n, _ = fields.shape
    r0 = np.asarray(r0, dtype=float)
    if r0.shape != (3,):
        raise ValidationError(f"Initial Bloch vector must have 3 components, got shape {r0.shape}")
    max_field = float(np.linalg.norm(fields, axis=2).max()) if fields.size else 0.0
    check_step(omega0, step, max_field)

    total = fields.copy()
    total[:, :, 2] += 0.5 * omega0
    norm0 = float(np.linalg.norm(r0))

    out = np.empty((batch, n, 3))
    r = np.tile(r0, (batch, 1))
    out[:, 0, :] = r
    for k in range(n - 1):
        b_start = total[:, k, :]
        b_end = total[:, k + 1, :]
        b_mid = 0.5 * (b_start + b_end)
        k1 = _rhs(b_start, r)
        k2 = _rhs(b_mid, r + 0.5 * step * k1)
        k3 = _rhs(b_mid, r + 0.5 * step * k2)
        k4 = _rhs(b_end, r + step * k3)
        r = r + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if norm0 > 0.0:
            r *= (norm0 / np.linalg.norm(r, axis=1))[:, np.newaxis]
        out[:, k + 1, :] = r
    return out


def integrate_trajectory(omega0: float, field: FieldTrajectory, rho0: np.ndarray) -> np.ndarray:
    """Bloch trajectory (rho^0..rho^3) of one realization, shape (len(field.times), 4)."""
    if field.values.shape[0] != len(field.times):
        raise ValidationError("Field length does not match its time grid")
    v0 = to_bloch(rho0)
    spatial = integrate_bloch_batch(omega0, step_of(field.times), field.values[np.newaxis], v0[1:])[0]
    out = np.empty((len(field.times), 4))
    out[:, 0] = v0[0]
    out[:, 1:] = spatial
    return out
