"""Beam preparation and the exit beam splitter.

The exit splitter acts on the path as U(theta, phi) = [[e^{-i phi} sin, cos], [e^{-i phi} cos, -sin]]
(angles theta). Counter j after the splitter measures P_j(theta, phi) = U^dag P_j U.
"""

import logging
import math

import numpy as np

from src.config.config import NORMALIZATION_TOL
from src.services.bloch_core import PATH_OPERATORS
from src.utils.error_utils import ValidationError

logger = logging.getLogger(__name__)

SINGLET_AMPLITUDES = (1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0))


def prepare_beam(p: complex, q: complex) -> np.ndarray:
    """|Psi><Psi| with |Psi> = p |u, down> + q |d, up>."""
    norm = abs(p) ** 2 + abs(q) ** 2
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise ValidationError(f"Beam amplitudes must satisfy |p|^2 + |q|^2 = 1 (got {norm:.15g})")
    psi = np.zeros(4, dtype=complex)
    psi[1] = p
    psi[2] = q
    return np.outer(psi, psi.conj())


def singlet() -> np.ndarray:
    return prepare_beam(*SINGLET_AMPLITUDES)


def maximally_mixed() -> np.ndarray:
    return np.eye(4, dtype=complex) / 4.0


def product_state(path: np.ndarray, spin: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(path, dtype=complex), np.asarray(spin, dtype=complex))


def beam_splitter_unitary(theta: float, phi: float) -> np.ndarray:
    s, c = math.sin(theta), math.cos(theta)
    phase = np.exp(-1j * phi)
    return np.array([[phase * s, c], [phase * c, -s]], dtype=complex)


def path_projector(j: int, theta: float, phi: float) -> np.ndarray:
    """P_j(theta, phi) = U^dag P_j U for counter j in {1, 2}."""
    if j not in (1, 2):
        raise ValidationError(f"Counter index must be 1 or 2, got {j}")
    u = beam_splitter_unitary(theta, phi)
    return u.conj().T @ PATH_OPERATORS[j - 1] @ u


def path_observable(theta: float, phi: float) -> np.ndarray:
    """A(theta, phi) = P_1(theta, phi) - P_2(theta, phi)."""
    return path_projector(1, theta, phi) - path_projector(2, theta, phi)


def exit_transform(rho2: np.ndarray, theta: float, phi: float) -> np.ndarray:
    """(U (x) 1) rho2 (U (x) 1)^dag; counting P_j (x) Q on it equals counting P_j(theta, phi) (x) Q on rho2."""
    u = np.kron(beam_splitter_unitary(theta, phi), np.eye(2))
    rho2 = np.asarray(rho2, dtype=complex)
    return u @ rho2 @ u.conj().T
