"""Lindblad operators from L_D and brute-force dissipator assembly."""

import logging
from typing import Callable, List, Sequence

import numpy as np

from src.config.config import LINDBLAD_TOL
from src.services.bloch_core import PAULI, pauli_coefficients
from src.utils.error_utils import NoLindbladFormError
from src.utils.linalg import psd_sqrt, symmetric_part
from .matrices import MarkovMatrices

logger = logging.getLogger(__name__)


def lindblad_operators(m: MarkovMatrices) -> List[np.ndarray]:
    """A_k = sum_i a_ki sigma_i with [a_ki] the symmetric square root of L_D."""
    l_d = symmetric_part(m.l_d)
    min_eig = float(np.linalg.eigvalsh(l_d).min())
    if min_eig < -LINDBLAD_TOL:
        logger.info(f"L_D has eigenvalue {min_eig:.3e}; generator is not completely positive")
        raise NoLindbladFormError(
            f"L_D is not positive semidefinite (min eigenvalue {min_eig:.3e}); no Lindblad form exists",
            min_eigenvalue=min_eig,
        )
    root = psd_sqrt(l_d, tol=LINDBLAD_TOL)
    return [sum(root[k, i] * PAULI[i + 1] for i in range(3)) for k in range(3)]


def superoperator_bloch_matrix(superop: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Real 4x4 matrix of a hermiticity-preserving linear map in the Pauli basis."""
    out = np.zeros((4, 4))
    for nu in range(4):
        out[:, nu] = pauli_coefficients(superop(PAULI[nu])).real
    return out


def kossakowski_dissipator(l_d: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    """X -> sum_ij L_ij (sigma_j X sigma_i - {sigma_i sigma_j, X}/2)."""
    sig = PAULI[1:]

    def apply(x: np.ndarray) -> np.ndarray:
        out = np.zeros((2, 2), dtype=complex)
        for i in range(3):
            for j in range(3):
                if l_d[i, j] == 0:
                    continue
                prod = sig[i] @ sig[j]
                out += l_d[i, j] * (sig[j] @ x @ sig[i] - 0.5 * (prod @ x + x @ prod))
        return out

    return apply


def operator_dissipator(operators: Sequence[np.ndarray]) -> Callable[[np.ndarray], np.ndarray]:
    """X -> sum_k (A_k X A_k^dag - {A_k^dag A_k, X}/2)."""
    def apply(x: np.ndarray) -> np.ndarray:
        out = np.zeros((2, 2), dtype=complex)
        for op in operators:
            adj = op.conj().T
            out += op @ x @ adj - 0.5 * (adj @ op @ x + x @ adj @ op)
        return out

    return apply


def dissipator_bloch_matrix(l_d: np.ndarray) -> np.ndarray:
    """Bloch matrix of the Kossakowski dissipator, assembled entry by entry."""
    return superoperator_bloch_matrix(kossakowski_dissipator(np.asarray(l_d, dtype=float)))
