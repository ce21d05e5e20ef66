"""Virtual two-qubit tomography from counter/analyzer expectations.

Every coefficient rho_ij of rho2 = sum rho_ij P_i (x) Q_j is a linear combination
of measured expectations O^{j,n}(theta, phi). The path operators are recovered from
beam-splitter projectors:

    P_1 = P_2(0, 0),  P_2 = P_1(0, 0),
    P_3 = [A(pi/4, 0) + i A(pi/4, -pi/2)] / 2,  P_4 = P_3^dag,

with A = P_1(theta, phi) - P_2(theta, phi), and the spin operators from analyzer
projectors: Q_1 = Q_z, Q_2 = Q_-z, Q_3 = [(Q_x - Q_-x) + i (Q_y - Q_-y)] / 2, Q_4 = Q_3^dag.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.config.config import HERMITICITY_TOL
from src.services.bloch_core import axis_vector
from src.services.interferometer.correlators import observable_expectation
from src.utils.error_utils import MissingSettingError, SamplingError, ValidationError
from src.utils.linalg import is_hermitian

logger = logging.getLogger(__name__)

BEAM_SETTINGS: Tuple[Tuple[float, float], ...] = (
    (0.0, 0.0),
    (math.pi / 4.0, 0.0),
    (math.pi / 4.0, -math.pi / 2.0),
)
AXIS_LABELS: Tuple[str, ...] = ("+x", "-x", "+y", "-y", "+z", "-z")

# Key of one expectation: (theta, phi, counter j, axis label)
RecordKey = Tuple[float, float, int, str]

# P_i as sum of (weight, (theta, phi), counter j)
_PATH_DECOMPOSITION = {
    1: [(1.0, BEAM_SETTINGS[0], 2)],
    2: [(1.0, BEAM_SETTINGS[0], 1)],
    3: [(0.5, BEAM_SETTINGS[1], 1), (-0.5, BEAM_SETTINGS[1], 2),
        (0.5j, BEAM_SETTINGS[2], 1), (-0.5j, BEAM_SETTINGS[2], 2)],
}
_PATH_DECOMPOSITION[4] = [(np.conj(w), s, j) for w, s, j in _PATH_DECOMPOSITION[3]]

# Q_j as sum of (weight, axis label)
_SPIN_DECOMPOSITION = {
    1: [(1.0, "+z")],
    2: [(1.0, "-z")],
    3: [(0.5, "+x"), (-0.5, "-x"), (0.5j, "+y"), (-0.5j, "-y")],
}
_SPIN_DECOMPOSITION[4] = [(np.conj(w), a) for w, a in _SPIN_DECOMPOSITION[3]]


@dataclass
class TomographyRecord:
    expectations: Dict[RecordKey, float] = field(default_factory=dict)
    shots: Optional[int] = None

    def get(self, theta: float, phi: float, j: int, axis: str) -> float:
        try:
            return self.expectations[(theta, phi, j, axis)]
        except KeyError:
            raise MissingSettingError(theta, phi, axis, j) from None

    def rows(self) -> List[Tuple[float, float, int, str, float]]:
        return [(theta, phi, j, axis, value)
                for (theta, phi, j, axis), value in self.expectations.items()]

    @property
    def is_physical(self) -> bool:
        return all(-1e-10 <= v <= 1.0 + 1e-10 for v in self.expectations.values())


def _outcome_keys(setting: Tuple[float, float], axis: str) -> List[RecordKey]:
    """The four counter/analyzer outcomes that share one (setting, axis) run."""
    theta, phi = setting
    return [(theta, phi, 1, f"+{axis}"), (theta, phi, 1, f"-{axis}"),
            (theta, phi, 2, f"+{axis}"), (theta, phi, 2, f"-{axis}")]


def _exact_expectations(rho2: np.ndarray) -> Dict[RecordKey, float]:
    out = {}
    for theta, phi in BEAM_SETTINGS:
        for j in (1, 2):
            for axis in AXIS_LABELS:
                out[(theta, phi, j, axis)] = observable_expectation(rho2, j, theta, phi, axis_vector(axis))
    return out


def simulate_record(rho2: np.ndarray, shots: Optional[int] = None, seed: int = 0) -> TomographyRecord:
    """Exact traces (shots=None) or multinomial frequencies with `shots` draws per (setting, axis)."""
    rho2 = np.asarray(rho2, dtype=complex)
    if rho2.shape != (4, 4) or not is_hermitian(rho2, HERMITICITY_TOL):
        raise ValidationError("Tomography input must be a hermitian 4x4 matrix")
    exact = _exact_expectations(rho2)
    if shots is None:
        return TomographyRecord(expectations=exact)
    if shots <= 0:
        raise ValidationError(f"Shot count must be positive, got {shots}")

    rng = np.random.default_rng(seed)
    sampled: Dict[RecordKey, float] = {}
    for setting in BEAM_SETTINGS:
        for axis in ("x", "y", "z"):
            keys = _outcome_keys(setting, axis)
            probabilities = np.array([exact[k] for k in keys])
            if probabilities.min() < -1e-10:
                raise SamplingError(
                    f"Outcome probability {probabilities.min():.3e} is negative at theta={setting[0]:.6g}, "
                    f"phi={setting[1]:.6g}, axis {axis}; the state is not physical")
            probabilities = np.clip(probabilities, 0.0, None)
            probabilities /= probabilities.sum()
            counts = rng.multinomial(shots, probabilities)
            for key, count in zip(keys, counts):
                sampled[key] = count / shots
    return TomographyRecord(expectations=sampled, shots=shots)


def reconstruct(rec: TomographyRecord) -> np.ndarray:
    """4x4 table of rho_ij (row i: path operator, column j: spin operator)."""
    coefficients = np.zeros((4, 4), dtype=complex)
    for i, path_terms in _PATH_DECOMPOSITION.items():
        for j, spin_terms in _SPIN_DECOMPOSITION.items():
            # rho_ij = Tr(rho2 P_i^dag (x) Q_j^dag), expanded over measured projectors
            value = 0.0 + 0.0j
            for path_weight, (theta, phi), counter in path_terms:
                for spin_weight, axis in spin_terms:
                    value += np.conj(path_weight) * np.conj(spin_weight) * rec.get(theta, phi, counter, axis)
            coefficients[i - 1, j - 1] = value
    return coefficients
