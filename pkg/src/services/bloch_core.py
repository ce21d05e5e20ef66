"""Pauli-basis algebra for a single spin and the fixed path/spin projector families.

A 2x2 matrix is written rho = sum_mu rho^mu sigma_mu with sigma_0 the identity,
so a unit-trace state has rho^0 = 1/2 and purity bound |(rho^1, rho^2, rho^3)| <= 1/2.
Two-qubit operators use the ordering (u-up, u-down, d-up, d-down), i.e. kron(path, spin).
"""

import logging
from typing import Dict, Sequence

import numpy as np

from src.config.config import HERMITICITY_TOL
from src.utils.error_utils import ValidationError
from src.utils.linalg import is_hermitian

logger = logging.getLogger(__name__)

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

# Path operators P_1..P_4: |u><u|, |d><d|, |u><d|, |d><u|
PATH_OPERATORS = (
    np.array([[1, 0], [0, 0]], dtype=complex),
    np.array([[0, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [0, 0]], dtype=complex),
    np.array([[0, 0], [1, 0]], dtype=complex),
)

# Spin operators Q_1..Q_4: |up><up|, |down><down|, |up><down|, |down><up|
SPIN_OPERATORS = PATH_OPERATORS

AXES: Dict[str, np.ndarray] = {
    "x": np.array([1.0, 0.0, 0.0]),
    "y": np.array([0.0, 1.0, 0.0]),
    "z": np.array([0.0, 0.0, 1.0]),
}


def pauli_coefficients(m: np.ndarray) -> np.ndarray:
    """Complex coefficients x^mu = Tr(m sigma_mu)/2 of an arbitrary 2x2 matrix."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValidationError(f"Expected a 2x2 matrix, got shape {m.shape}")
    return np.array([0.5 * np.trace(m @ s) for s in PAULI])


def from_pauli_coefficients(x: Sequence[complex]) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    return sum(x[mu] * PAULI[mu] for mu in range(4))


def to_bloch(rho: np.ndarray) -> np.ndarray:
    """Bloch vector (rho^0..rho^3) of a hermitian 2x2 matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValidationError(f"Spin density must be 2x2, got shape {rho.shape}")
    if not is_hermitian(rho, HERMITICITY_TOL):
        raise ValidationError("Spin density is not hermitian within tolerance")
    return pauli_coefficients(rho).real


def from_bloch(v: Sequence[float]) -> np.ndarray:
    """2x2 matrix for a Bloch vector; unphysical vectors are allowed."""
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise ValidationError(f"Bloch vector must have 4 components, got shape {v.shape}")
    return from_pauli_coefficients(v)


def pauli_expectation(x: np.ndarray, rho: np.ndarray) -> float:
    """Tr(X rho) = 2 sum_mu X^mu rho^mu for hermitian X."""
    x = np.asarray(x, dtype=complex)
    if not is_hermitian(x, HERMITICITY_TOL):
        raise ValidationError("Observable is not hermitian within tolerance")
    return float(2.0 * np.dot(to_bloch(x), to_bloch(rho)))


def state_eigenvalues(rho: np.ndarray) -> np.ndarray:
    """Spectrum of the hermitian part, sorted descending."""
    rho = np.asarray(rho, dtype=complex)
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    return w[::-1]


def is_physical(rho: np.ndarray, tol: float = 1e-10) -> bool:
    return bool(state_eigenvalues(rho)[-1] >= -tol)


def unit_vector(n: Sequence[float], tol: float = 1e-12) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValidationError(f"Direction must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > tol:
        raise ValidationError(f"Direction {n.tolist()} is not a unit vector")
    return n


def spin_projector(n: Sequence[float]) -> np.ndarray:
    """Q_n = (1 + n.sigma)/2, the analyzer projector along unit direction n."""
    n = unit_vector(n)
    return 0.5 * (SIGMA_0 + n[0] * SIGMA_1 + n[1] * SIGMA_2 + n[2] * SIGMA_3)


def spin_observable(n: Sequence[float]) -> np.ndarray:
    """B(n) = Q_n - Q_{-n} = n.sigma."""
    n = unit_vector(n)
    return n[0] * SIGMA_1 + n[1] * SIGMA_2 + n[2] * SIGMA_3


def axis_vector(axis: str) -> np.ndarray:
    """Direction for labels like '+x', '-z' or 'y'."""
    sign = -1.0 if axis.startswith("-") else 1.0
    name = axis.lstrip("+-")
    if name not in AXES:
        raise ValidationError(f"Unknown axis label '{axis}'")
    return sign * AXES[name]


def composite_basis_element(i: int, j: int) -> np.ndarray:
    """P_i (x) Q_j for 1-based indices i, j."""
    return np.kron(PATH_OPERATORS[i - 1], SPIN_OPERATORS[j - 1])


def state_from_coefficients(coefficients: np.ndarray) -> np.ndarray:
    """4x4 matrix sum_ij rho_ij P_i (x) Q_j from the 4x4 coefficient table."""
    coefficients = np.asarray(coefficients, dtype=complex)
    return sum(coefficients[i, j] * composite_basis_element(i + 1, j + 1)
               for i in range(4) for j in range(4))


def coefficients_from_state(rho2: np.ndarray) -> np.ndarray:
    """Inverse of state_from_coefficients: rho_ij = Tr(rho2 P_i^dag (x) Q_j^dag)."""
    rho2 = np.asarray(rho2, dtype=complex)
    out = np.empty((4, 4), dtype=complex)
    for i in range(4):
        for j in range(4):
            out[i, j] = np.trace(rho2 @ composite_basis_element(i + 1, j + 1).conj().T)
    return out


def spin_marginal(rho2: np.ndarray) -> np.ndarray:
    """Partial trace over the path degree of freedom."""
    rho2 = np.asarray(rho2, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("ajak->jk", rho2)


def path_marginal(rho2: np.ndarray) -> np.ndarray:
    rho2 = np.asarray(rho2, dtype=complex).reshape(2, 2, 2, 2)
    return np.einsum("iaka->ik", rho2)
