"""Semigroup propagator G_t = exp(t (H + D)) on Bloch vectors."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np

from src.services.bloch_core import from_bloch, from_pauli_coefficients, pauli_coefficients, to_bloch
from src.services.generator.params import GeneratorParams, bloch_generator
from src.utils.error_utils import ValidationError
from src.utils.linalg import expm_series, expm_small

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Propagator:
    matrix: np.ndarray
    t: float

    @property
    def spatial(self) -> np.ndarray:
        """3x3 block acting on (rho^1, rho^2, rho^3)."""
        return self.matrix[1:, 1:]

    def apply(self, v: Sequence[float]) -> np.ndarray:
        return self.matrix @ np.asarray(v)

    def apply_to_matrix(self, x: np.ndarray) -> np.ndarray:
        """Applies the map to any 2x2 matrix, hermitian or not, by linearity."""
        return from_pauli_coefficients(self.matrix @ pauli_coefficients(x))


def propagator(p: GeneratorParams, t: float) -> Propagator:
    if t < 0:
        raise ValidationError(f"Propagator needs t >= 0, got {t}")
    g = expm_small(bloch_generator(p), t)
    # trace preservation holds exactly; scrub rounding in the first row
    g[0, :] = (1.0, 0.0, 0.0, 0.0)
    return Propagator(matrix=g, t=float(t))


def propagator_series(p: GeneratorParams, times: Iterable[float]) -> List[Propagator]:
    times = [float(t) for t in times]
    if any(t < 0 for t in times):
        raise ValidationError("Propagator times must be nonnegative")
    out = []
    for t, g in zip(times, expm_series(bloch_generator(p), times)):
        g[0, :] = (1.0, 0.0, 0.0, 0.0)
        out.append(Propagator(matrix=g, t=t))
    return out


def evolve_spin(p: GeneratorParams, rho: np.ndarray, t: float) -> np.ndarray:
    """Gamma_t[rho] for a 2x2 spin density."""
    return from_bloch(propagator(p, t).apply(to_bloch(rho)))


def dual_propagator(p: GeneratorParams, t: float) -> Propagator:
    """Heisenberg-picture map: Tr(Gamma_t[rho] X) = Tr(rho Gamma*_t[X])."""
    g = propagator(p, t)
    return Propagator(matrix=g.matrix.T.copy(), t=g.t)


def evolve_observable(p: GeneratorParams, x: np.ndarray, t: float) -> np.ndarray:
    return from_bloch(dual_propagator(p, t).apply(to_bloch(x)))
