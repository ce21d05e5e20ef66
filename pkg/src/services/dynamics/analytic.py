"""Closed-form solutions for the diagonal and single-axis generator shapes."""

import logging
import math
from typing import Sequence, Tuple

import numpy as np

from src.config.config import DELTA_SERIES_THRESHOLD
from src.services.generator.params import GeneratorParams
from src.utils.error_utils import ValidationError

logger = logging.getLogger(__name__)


def require_diagonal(p: GeneratorParams):
    if not p.is_diagonal_shape():
        raise ValidationError("Parameters do not have the diagonal shape (b = c = beta = 0, a = alpha, h1 = h2 = 0)")


def require_single_axis(p: GeneratorParams):
    if not p.is_single_axis_shape():
        raise ValidationError("Parameters do not have the single-axis shape (a = c = beta = 0, alpha = gamma, h1 = h2 = 0)")


def single_axis_delta_squared(p: GeneratorParams) -> float:
    return p.gamma ** 2 + 4.0 * p.b ** 2 - p.omega ** 2


def hyperbolic_pair(delta_squared: float, t: float) -> Tuple[float, float]:
    """(cosh(delta t), sinh(delta t)/delta), continued to cos/sin for imaginary delta."""
    delta = math.sqrt(abs(delta_squared))
    if delta * t < DELTA_SERIES_THRESHOLD:
        # series to second order in delta^2 t^2
        x = delta_squared * t * t
        return 1.0 + 0.5 * x, t * (1.0 + x / 6.0)
    if delta_squared > 0:
        return math.cosh(delta * t), math.sinh(delta * t) / delta
    return math.cos(delta * t), math.sin(delta * t) / delta


def analytic_diag(p: GeneratorParams, v: Sequence[float], t: float) -> np.ndarray:
    """Transverse components damped by e^{-2at} and rotated by omega t; rho^3 damped by e^{-2 gamma t}."""
    require_diagonal(p)
    v = np.asarray(v, dtype=float)
    transverse = math.exp(-2.0 * p.a * t)
    c, s = math.cos(p.omega * t), math.sin(p.omega * t)
    return np.array([
        v[0],
        transverse * (c * v[1] - s * v[2]),
        transverse * (s * v[1] + c * v[2]),
        math.exp(-2.0 * p.gamma * t) * v[3],
    ])


def single_axis_block(p: GeneratorParams, t: float) -> np.ndarray:
    """2x2 transverse block e^{-gamma t}[cosh(dt) I + sinh(dt)/d (A + gamma I)]."""
    ch, sh_over_delta = hyperbolic_pair(single_axis_delta_squared(p), t)
    omega, b, gamma = p.omega, p.b, p.gamma
    shifted = np.array([[gamma, -omega - 2.0 * b], [omega - 2.0 * b, -gamma]])
    return math.exp(-gamma * t) * (ch * np.eye(2) + sh_over_delta * shifted)


def analytic_single_axis(p: GeneratorParams, v: Sequence[float], t: float) -> np.ndarray:
    require_single_axis(p)
    v = np.asarray(v, dtype=float)
    transverse = single_axis_block(p, t) @ v[1:3]
    return np.array([v[0], transverse[0], transverse[1], math.exp(-2.0 * p.gamma * t) * v[3]])


def singlet_spectrum(p: GeneratorParams, t: float) -> np.ndarray:
    """Eigenvalues {E-, E-, lambda+, lambda-} of the evolved singlet, sorted descending."""
    require_diagonal(p)
    longitudinal = math.exp(-2.0 * p.gamma * t)
    transverse = math.exp(-2.0 * p.a * t)
    e_minus = (1.0 - longitudinal) / 4.0
    lam_plus = (1.0 + longitudinal + 2.0 * transverse) / 4.0
    lam_minus = (1.0 + longitudinal - 2.0 * transverse) / 4.0
    return np.sort(np.array([e_minus, e_minus, lam_plus, lam_minus]))[::-1]


def singlet_entries(p: GeneratorParams, t: float) -> Tuple[float, float, complex]:
    """(E-, E+, F) of the evolved singlet for the diagonal shape."""
    require_diagonal(p)
    longitudinal = math.exp(-2.0 * p.gamma * t)
    f = -0.5 * np.exp(-t * (2.0 * p.a - 1j * p.omega))
    return (1.0 - longitudinal) / 4.0, (1.0 + longitudinal) / 4.0, complex(f)
