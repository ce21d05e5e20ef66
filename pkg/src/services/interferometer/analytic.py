"""Closed-form singlet correlators for the undamped, diagonal, single-axis and weak white-noise cases."""

import logging
import math

import numpy as np

from src.services import perturbative
from src.services.dynamics.analytic import (
    hyperbolic_pair,
    require_diagonal,
    require_single_axis,
    single_axis_delta_squared,
)
from src.services.generator.params import GeneratorParams
from src.utils.error_utils import ValidationError
from .correlators import CorrelatorSetting

logger = logging.getLogger(__name__)

CASES = ("white-perturbative", "diagonal", "single-axis", "none")


def _combine(s: CorrelatorSetting, g: np.ndarray, rotated_f: np.ndarray) -> float:
    return float(np.dot(s.n, math.cos(2.0 * s.theta) * g - math.sin(2.0 * s.theta) * rotated_f))


def _undamped(p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    if p.dissipation_scale != 0.0 or p.h1 != 0.0 or p.h2 != 0.0:
        raise ValidationError("The undamped correlator needs zero dissipation and h = (0, 0, h3)")
    n1, n2, n3 = s.n
    phase = p.omega * t - s.phi
    return n3 * math.cos(2.0 * s.theta) - math.sin(2.0 * s.theta) * (n1 * math.cos(phase) + n2 * math.sin(phase))


def _diagonal(p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    require_diagonal(p)
    n1, n2, n3 = s.n
    phase = p.omega * t - s.phi
    return (math.exp(-2.0 * p.gamma * t) * math.cos(2.0 * s.theta) * n3
            - math.exp(-2.0 * p.a * t) * math.sin(2.0 * s.theta)
            * (n1 * math.cos(phase) + n2 * math.sin(phase)))


def _single_axis(p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    require_single_axis(p)
    ch, sh = hyperbolic_pair(single_axis_delta_squared(p), t)
    omega, b, gamma = p.omega, p.b, p.gamma
    cos_phi, sin_phi = math.cos(s.phi), math.sin(s.phi)
    transverse = math.exp(-gamma * t)
    g = np.array([0.0, 0.0, math.exp(-2.0 * gamma * t)])
    rotated_f = transverse * np.array([
        (ch + gamma * sh) * cos_phi + (omega + 2.0 * b) * sh * sin_phi,
        (-ch + gamma * sh) * sin_phi + (omega - 2.0 * b) * sh * cos_phi,
        0.0,
    ])
    return _combine(s, g, rotated_f)


def _white_perturbative(p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    if p.h1 != 0.0 or p.h2 != 0.0:
        raise ValidationError("The perturbative correlator needs h = (0, 0, h3)")
    omega0 = p.omega
    vectors = perturbative.gf_vectors_perturbative(p, omega0, t)
    return _combine(s, vectors.g, perturbative.rotated_f(p, omega0, t, s.phi))


def analytic_correlator(case: str, p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    """Closed-form C_t(theta, phi; n) for the singlet; omega is taken as 2*h3 in every case."""
    if case == "none":
        return _undamped(p, s, t)
    if case == "diagonal":
        return _diagonal(p, s, t)
    if case == "single-axis":
        return _single_axis(p, s, t)
    if case == "white-perturbative":
        return _white_perturbative(p, s, t)
    raise ValidationError(f"Unknown correlator case '{case}' (expected one of {', '.join(CASES)})")
