"""First-order (in the dissipation) propagator for weak white-noise dissipation.

Terms linear in t are resummed into the decay factors e^{-(a+alpha)t} and
e^{-2 gamma t}; the remaining corrections are O(dissipation / omega0).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from src.config.config import WEAK_COUPLING_RATIO
from src.services.generator.params import GeneratorParams
from src.services.interferometer.correlators import GFVectors
from src.utils.error_utils import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PerturbativeG:
    """Spatial 3x3 propagator entries plus the amplitude/phase pairs used in the correlators.

    b_amp * (cos phi_b, sin phi_b) = (a - alpha, 2b) and c_amp * (cos phi_c, sin phi_c) = (c, beta).
    """
    matrix: np.ndarray
    b_amp: float
    phi_b: float
    c_amp: float
    phi_c: float
    t: float

    @property
    def g_vector(self) -> np.ndarray:
        return self.matrix[:, 2].copy()

    @property
    def f_vector(self) -> np.ndarray:
        return self.matrix[:, 0] - 1j * self.matrix[:, 1]


def _check_regime(p: GeneratorParams, omega0: float):
    if omega0 == 0:
        raise ValidationError("First-order propagator divides by omega0; omega0 must be nonzero")
    scale = p.dissipation_scale
    if scale > WEAK_COUPLING_RATIO * abs(omega0):
        logger.warning(f"Dissipation scale {scale:.3g} is not small against omega0={omega0:.3g}; "
                       f"first-order propagator is unreliable")


def g_first_order(p: GeneratorParams, omega0: float, t: float) -> PerturbativeG:
    _check_regime(p, omega0)
    a, b, c, alpha, beta, gamma = p.dissipation
    theta = omega0 * t
    sin_t, cos_t = math.sin(theta), math.cos(theta)
    sh, ch = math.sin(theta / 2.0), math.cos(theta / 2.0)
    transverse = math.exp(-(a + alpha) * t)
    k = 4.0 / omega0 * sh
    g = np.array([
        [transverse * cos_t + (alpha - a) / omega0 * sin_t,
         -(transverse + 2.0 * b / omega0) * sin_t,
         -k * (c * ch - beta * sh)],
        [(transverse - 2.0 * b / omega0) * sin_t,
         transverse * cos_t + (a - alpha) / omega0 * sin_t,
         -k * (beta * ch + c * sh)],
        [-k * (c * ch + beta * sh),
         k * (c * sh - beta * ch),
         math.exp(-2.0 * gamma * t)],
    ])
    return PerturbativeG(
        matrix=g,
        b_amp=math.hypot(a - alpha, 2.0 * b),
        phi_b=math.atan2(2.0 * b, a - alpha),
        c_amp=math.hypot(c, beta),
        phi_c=math.atan2(beta, c),
        t=float(t),
    )


def gf_vectors_perturbative(p: GeneratorParams, omega0: float, t: float) -> GFVectors:
    """G(t) and F(t) from the amplitude/phase forms of the first-order propagator."""
    # Read off the matrix columns: G2 pairs with theta/2 + phi_C, the |B| terms of F1 and F2 with phi_B.
    pg = g_first_order(p, omega0, t)
    a, alpha, gamma = p.a, p.alpha, p.gamma
    theta = omega0 * t
    sh = math.sin(theta / 2.0)
    transverse = math.exp(-(a + alpha) * t)
    c_term = 4.0 * pg.c_amp / omega0 * sh
    b_term = pg.b_amp / omega0 * math.sin(theta)
    g = np.array([
        -c_term * math.cos(theta / 2.0 + pg.phi_c),
        -c_term * math.sin(theta / 2.0 + pg.phi_c),
        math.exp(-2.0 * gamma * t),
    ])
    # F = first column - i * second column, written with the amplitude/phase pairs
    f = np.array([
        transverse * math.cos(theta) - b_term * math.cos(pg.phi_b)
        + 1j * (transverse * math.sin(theta) + b_term * math.sin(pg.phi_b)),
        transverse * math.sin(theta) - b_term * math.sin(pg.phi_b)
        - 1j * (transverse * math.cos(theta) + b_term * math.cos(pg.phi_b)),
        -c_term * math.cos(theta / 2.0 - pg.phi_c)
        - 1j * c_term * math.sin(theta / 2.0 - pg.phi_c),
    ])
    return GFVectors(g=g, f=f)


def rotated_f(p: GeneratorParams, omega0: float, t: float, phi: float) -> np.ndarray:
    """Re(e^{-i phi} F(t)) in amplitude/phase form."""
    pg = g_first_order(p, omega0, t)
    theta = omega0 * t
    transverse = math.exp(-(p.a + p.alpha) * t)
    c_term = 4.0 * pg.c_amp / omega0 * math.sin(theta / 2.0)
    b_term = pg.b_amp / omega0 * math.sin(theta)
    return np.array([
        transverse * math.cos(theta - phi) - b_term * math.cos(phi + pg.phi_b),
        transverse * math.sin(theta - phi) - b_term * math.sin(phi + pg.phi_b),
        -c_term * math.cos(theta / 2.0 - phi - pg.phi_c),
    ])
