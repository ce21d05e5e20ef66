"""Coefficient matrices of the second-order Markovian generator.

C(t) = int_0^t W(s) U(-s) ds, with U the Larmor rotation about z. In the Markov
limit C_A = (C - C^T)/2 feeds the Hamiltonian shift and L_D = C + C^T the
Kossakowski matrix of the dissipator.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad_vec

from src.config.config import (
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_TAIL_BOUND,
    SYMMETRY_TOL,
)
from src.services.noise.models import (
    DiagonalExp,
    GeneralStationary,
    NoiseModel,
    SingleAxisExp,
    WhiteNoise,
    covariance_at,
)
from src.utils.error_utils import NumericalError, UnsupportedVariantError, ValidationError
from src.utils.linalg import antisymmetric_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MarkovMatrices:
    c_a: np.ndarray
    l_d: np.ndarray
    omega0: float

    def __post_init__(self):
        c_a = np.array(self.c_a, dtype=float)
        l_d = np.array(self.l_d, dtype=float)
        if c_a.shape != (3, 3) or l_d.shape != (3, 3):
            raise ValidationError("C_A and L_D must both be 3x3")
        if np.max(np.abs(c_a + c_a.T)) > SYMMETRY_TOL:
            raise ValidationError("C_A is not antisymmetric within tolerance")
        if np.max(np.abs(l_d - l_d.T)) > SYMMETRY_TOL:
            raise ValidationError("L_D is not symmetric within tolerance")
        object.__setattr__(self, "c_a", c_a)
        object.__setattr__(self, "l_d", l_d)


def rotation_u(omega0: float, t: float) -> np.ndarray:
    """Rotation by omega0*t about the z axis."""
    c, s = math.cos(omega0 * t), math.sin(omega0 * t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def _exp_cos_sin_integrals(lam: float, omega: float, t: float):
    """(int_0^t e^{-lam s} cos(omega s) ds, int_0^t e^{-lam s} sin(omega s) ds); t may be inf."""
    denom = lam ** 2 + omega ** 2
    if math.isinf(t):
        return lam / denom, omega / denom
    decay = math.exp(-lam * t)
    c, s = math.cos(omega * t), math.sin(omega * t)
    int_cos = (lam - decay * (lam * c - omega * s)) / denom
    int_sin = (omega - decay * (lam * s + omega * c)) / denom
    return int_cos, int_sin


def _exp_integral(rate: float, t: float) -> float:
    if math.isinf(t):
        return 1.0 / rate
    return -math.expm1(-rate * t) / rate


def truncation_time(model: GeneralStationary) -> float:
    """T* such that the declared envelope's tail beyond T* is below QUAD_TAIL_BOUND."""
    amplitude, decay = model.envelope_amplitude, model.envelope_decay
    if amplitude <= 0:
        return 0.0
    ratio = amplitude / (decay * QUAD_TAIL_BOUND)
    return max(0.0, math.log(ratio) / decay)


def _quadrature_c(model: GeneralStationary, omega0: float, t: float) -> np.ndarray:
    upper = min(t, truncation_time(model))
    if upper <= 0:
        return np.zeros((3, 3))

    def integrand(s: float) -> np.ndarray:
        return (covariance_at(model, s) @ rotation_u(omega0, -s)).ravel()

    result, err = quad_vec(integrand, 0.0, upper, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL,
                           limit=QUAD_LIMIT)
    target = max(QUAD_EPSABS, QUAD_EPSREL * float(np.linalg.norm(result)))
    if not np.isfinite(err) or err > 10.0 * target:
        logger.error(f"Quadrature for {model.label} covariance stopped at error {err:.3e} (target {target:.3e})")
        raise NumericalError(f"Quadrature did not reach tolerance on [0, {upper:.6g}]", achieved=float(err))
    logger.debug(f"Quadrature on [0, {upper:.6g}] converged, error estimate {err:.3e}")
    return result.reshape(3, 3)


def finite_time_c(model: NoiseModel, omega0: float, t: float) -> np.ndarray:
    """C(t) = int_0^t W(s) U(-s) ds; t = inf gives the Markov value."""
    if t < 0:
        raise ValidationError(f"finite_time_c needs t >= 0, got {t}")
    if isinstance(model, WhiteNoise):
        raise UnsupportedVariantError("White noise has no finite-time C(t); use markov_matrices()")
    if t == 0:
        return np.zeros((3, 3))
    if isinstance(model, DiagonalExp):
        int_cos, int_sin = _exp_cos_sin_integrals(model.lam, omega0, t)
        w1 = model.w1
        return np.array([
            [w1 * int_cos, w1 * int_sin, 0.0],
            [-w1 * int_sin, w1 * int_cos, 0.0],
            [0.0, 0.0, model.w3 * _exp_integral(model.mu, t)],
        ])
    if isinstance(model, SingleAxisExp):
        int_cos, int_sin = _exp_cos_sin_integrals(model.lam, omega0, t)
        c = np.zeros((3, 3))
        c[0, 0] = model.w * int_cos
        c[0, 1] = model.w * int_sin
        return c
    if isinstance(model, GeneralStationary):
        return _quadrature_c(model, omega0, t)
    raise UnsupportedVariantError(f"Unknown noise model {type(model).__name__}")


def markov_matrices(model: NoiseModel, omega0: float) -> MarkovMatrices:
    """Markov-limit C_A and L_D for any noise variant."""
    if isinstance(model, WhiteNoise):
        return MarkovMatrices(c_a=np.zeros((3, 3)), l_d=model.strength.copy(), omega0=omega0)
    c = finite_time_c(model, omega0, math.inf)
    l_d = c + c.T
    matrices = MarkovMatrices(c_a=antisymmetric_part(c), l_d=l_d, omega0=omega0)
    logger.debug(f"Markov matrices for {type(model).__name__}: L_D diag {np.diag(l_d)}")
    return matrices
