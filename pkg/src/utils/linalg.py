"""Small dense linear-algebra helpers shared by the generator and dynamics code."""

import logging
from typing import Iterable, List, Tuple

import numpy as np
import scipy.linalg

from src.config.config import EXPM_COND_LIMIT, PSD_TOL
from src.utils.error_utils import ValidationError

logger = logging.getLogger(__name__)


def _eigendecompose(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray] | None:
    """Returns (eigenvalues, V, V^-1) or None when the eigenbasis is ill-conditioned."""
    w, v = np.linalg.eig(a)
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > EXPM_COND_LIMIT:
        logger.debug(f"Eigenbasis condition number {cond:.3g} exceeds {EXPM_COND_LIMIT:g}; using Pade expm")
        return None
    return w, v, np.linalg.inv(v)


def expm_small(a: np.ndarray, t: float = 1.0) -> np.ndarray:
    """exp(t*a) for a small real matrix.

    Diagonalizes when the eigenbasis is well conditioned and falls back to
    scaling-and-squaring (scipy) for defective or nearly defective matrices.
    """
    a = np.asarray(a, dtype=float)
    if t == 0.0:
        return np.eye(a.shape[0])
    decomposition = _eigendecompose(a)
    if decomposition is None:
        return scipy.linalg.expm(t * a)
    w, v, v_inv = decomposition
    return ((v * np.exp(t * w)) @ v_inv).real


def expm_series(a: np.ndarray, times: Iterable[float]) -> List[np.ndarray]:
    """exp(t*a) for many t, reusing one eigendecomposition."""
    a = np.asarray(a, dtype=float)
    times = list(times)
    decomposition = _eigendecompose(a)
    if decomposition is None:
        return [scipy.linalg.expm(t * a) for t in times]
    w, v, v_inv = decomposition
    return [((v * np.exp(t * w)) @ v_inv).real for t in times]


def symmetric_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.T)


def antisymmetric_part(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m - m.T)


def psd_sqrt(m: np.ndarray, tol: float = PSD_TOL) -> np.ndarray:
    """Symmetric square root of a real symmetric PSD matrix.

    Eigenvalues in [-tol, 0) are clamped to zero; anything more negative is
    the caller's problem and raises ValidationError.
    """
    w, v = np.linalg.eigh(symmetric_part(np.asarray(m, dtype=float)))
    if w.min() < -tol:
        raise ValidationError(f"Matrix is not positive semidefinite (min eigenvalue {w.min():.3e})")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.T


def is_hermitian(m: np.ndarray, tol: float) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)
