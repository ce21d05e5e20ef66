"""Counter expectations, correlators C_t(theta, phi; n) and the CHSH combination."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.config.config import NORMALIZATION_TOL
from src.services.bloch_core import spin_marginal, spin_observable, spin_projector, unit_vector
from src.services.dynamics.extended import evolve_extended
from src.services.dynamics.propagator import Propagator, propagator
from src.services.generator.params import GeneratorParams
from .beam import path_observable, path_projector

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CorrelatorSetting:
    theta: float
    phi: float
    n: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n", unit_vector(self.n, tol=NORMALIZATION_TOL))


@dataclass(frozen=True, eq=False)
class ChshConfig:
    """Beam settings (theta1, phi1), (theta2, phi2) and analyzer directions n1, n2."""
    angles1: Tuple[float, float]
    angles2: Tuple[float, float]
    n1: np.ndarray
    n2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "n1", unit_vector(self.n1, tol=NORMALIZATION_TOL))
        object.__setattr__(self, "n2", unit_vector(self.n2, tol=NORMALIZATION_TOL))

    def settings(self) -> Tuple[CorrelatorSetting, CorrelatorSetting, CorrelatorSetting, CorrelatorSetting]:
        """The four settings in the order they enter C11 + C12 + C21 - C22."""
        return (
            CorrelatorSetting(*self.angles1, self.n1),
            CorrelatorSetting(*self.angles1, self.n2),
            CorrelatorSetting(*self.angles2, self.n1),
            CorrelatorSetting(*self.angles2, self.n2),
        )


def optimal_chsh_config() -> ChshConfig:
    """Settings that reach 2*sqrt(2) on the undamped singlet at t = 0."""
    r = 1.0 / math.sqrt(2.0)
    return ChshConfig(angles1=(0.0, 0.0), angles2=(math.pi / 4.0, 0.0),
                      n1=np.array([-r, 0.0, r]), n2=np.array([r, 0.0, r]))


@dataclass(frozen=True, eq=False)
class GFVectors:
    """G(t): third column of the spatial propagator; F(t): first column minus i times the second."""
    g: np.ndarray
    f: np.ndarray


def observable_expectation(rho2: np.ndarray, j: int, theta: float, phi: float, n: Sequence[float]) -> float:
    """O^{j,n}(theta, phi) = Tr(rho2 P_j(theta, phi) (x) Q_n); left as-is outside [0, 1]."""
    op = np.kron(path_projector(j, theta, phi), spin_projector(n))
    value = float(np.real(np.trace(np.asarray(rho2) @ op)))
    if value < -1e-10 or value > 1.0 + 1e-10:
        logger.debug(f"Expectation O^{{{j},n}} = {value:.6g} outside [0, 1] (theta={theta:.6g}, phi={phi:.6g})")
    return value


def correlator_trace(rho2: np.ndarray, s: CorrelatorSetting) -> float:
    """C = O^{1,n} + O^{2,-n} - O^{1,-n} - O^{2,n}."""
    n = s.n
    return (observable_expectation(rho2, 1, s.theta, s.phi, n)
            + observable_expectation(rho2, 2, s.theta, s.phi, -n)
            - observable_expectation(rho2, 1, s.theta, s.phi, -n)
            - observable_expectation(rho2, 2, s.theta, s.phi, n))


def correlator_operator(s: CorrelatorSetting) -> np.ndarray:
    """A(theta, phi) (x) B(n)."""
    return np.kron(path_observable(s.theta, s.phi), spin_observable(s.n))


def correlator_from_marginal(rho2: np.ndarray, s: CorrelatorSetting) -> float:
    """C from counter 1 alone plus the spin marginal: 2(O^{1,n} - O^{1,-n}) - Tr(rho_spin B(n))."""
    n = s.n
    counter_one = (observable_expectation(rho2, 1, s.theta, s.phi, n)
                   - observable_expectation(rho2, 1, s.theta, s.phi, -n))
    spin_term = float(np.real(np.trace(spin_marginal(rho2) @ spin_observable(n))))
    return 2.0 * counter_one - spin_term


def gf_vectors(g: Propagator) -> GFVectors:
    spatial = g.spatial
    return GFVectors(g=spatial[:, 2].copy(), f=spatial[:, 0] - 1j * spatial[:, 1])


def correlator_from_gf(vectors: GFVectors, s: CorrelatorSetting) -> float:
    """n . [cos(2 theta) G - sin(2 theta) Re(e^{-i phi} F)]."""
    rotated = np.real(np.exp(-1j * s.phi) * vectors.f)
    return float(np.dot(s.n, math.cos(2.0 * s.theta) * vectors.g - math.sin(2.0 * s.theta) * rotated))


def correlator_vector(p: GeneratorParams, s: CorrelatorSetting, t: float) -> float:
    """Correlator of the evolved singlet from propagator columns."""
    return correlator_from_gf(gf_vectors(propagator(p, t)), s)


def chsh_combination(values: Sequence[float]) -> float:
    c11, c12, c21, c22 = values
    return c11 + c12 + c21 - c22


def chsh_value(p: GeneratorParams, c: ChshConfig, t: float) -> float:
    vectors = gf_vectors(propagator(p, t))
    return chsh_combination([correlator_from_gf(vectors, s) for s in c.settings()])


def chsh_value_trace(p: GeneratorParams, c: ChshConfig, rho2: np.ndarray, t: float) -> float:
    """CHSH combination for an arbitrary initial state, through the evolved density matrix."""
    evolved = evolve_extended(p, rho2, t)
    return chsh_combination([correlator_trace(evolved, s) for s in c.settings()])
