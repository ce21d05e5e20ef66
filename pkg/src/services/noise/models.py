"""Stationary gaussian field models and their covariance matrices W(t)."""

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from src.config.config import SYMMETRY_TOL
from src.utils.error_utils import UnsupportedVariantError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class WhiteNoise:
    """Delta-correlated field, W_ij(t-s) = W_ij delta(t-s)."""
    strength: np.ndarray

    def __post_init__(self):
        w = np.array(self.strength, dtype=float)
        if w.shape != (3, 3):
            raise ValidationError(f"White-noise strength must be 3x3, got shape {w.shape}")
        if np.max(np.abs(w - w.T)) > SYMMETRY_TOL:
            raise ValidationError("White-noise strength matrix is not symmetric")
        min_eig = np.linalg.eigvalsh(w).min()
        if min_eig < -SYMMETRY_TOL:
            raise ValidationError(f"White-noise strength has negative eigenvalue {min_eig:.3e}")
        w.setflags(write=False)
        object.__setattr__(self, "strength", w)

    @property
    def max_rate(self) -> float:
        return float(np.abs(self.strength).max())


@dataclass(frozen=True)
class DiagonalExp:
    """Uncorrelated components: W = diag(g^2 B1^2 e^{-lam|t|}, same, g^2 B3^2 e^{-mu|t|})."""
    g: float
    b1: float
    b3: float
    lam: float
    mu: float

    def __post_init__(self):
        if self.lam <= 0 or self.mu <= 0:
            raise ValidationError(f"Inverse correlation times must be positive (lam={self.lam}, mu={self.mu})")

    @property
    def w1(self) -> float:
        return self.g ** 2 * self.b1 ** 2

    @property
    def w3(self) -> float:
        return self.g ** 2 * self.b3 ** 2

    @property
    def envelope_amplitude(self) -> float:
        return max(self.w1, self.w3)

    @property
    def envelope_decay(self) -> float:
        return min(self.lam, self.mu)


@dataclass(frozen=True)
class SingleAxisExp:
    """Field along x only: W = diag(g^2 B^2 e^{-lam|t|}, 0, 0)."""
    g: float
    b: float
    lam: float

    def __post_init__(self):
        if self.lam <= 0:
            raise ValidationError(f"Inverse correlation time must be positive (lam={self.lam})")

    @property
    def w(self) -> float:
        return self.g ** 2 * self.b ** 2

    @property
    def envelope_amplitude(self) -> float:
        return self.w

    @property
    def envelope_decay(self) -> float:
        return self.lam


@dataclass(frozen=True, eq=False)
class GeneralStationary:
    """Arbitrary stationary covariance, given for lags t >= 0.

    The caller declares a bound ||W(t)|| <= envelope_amplitude * exp(-envelope_decay * t);
    it fixes where the Markov-limit integral is truncated.
    """
    covariance_fn: Callable[[float], np.ndarray]
    envelope_amplitude: float
    envelope_decay: float
    label: str = field(default="general")

    def __post_init__(self):
        if self.envelope_decay <= 0:
            raise ValidationError("Declared envelope must decay (envelope_decay > 0)")
        if self.envelope_amplitude < 0:
            raise ValidationError("Declared envelope amplitude must be nonnegative")


NoiseModel = Union[WhiteNoise, DiagonalExp, SingleAxisExp, GeneralStationary]


def damped_cosine_model(amplitudes: Sequence[float], decays: Sequence[float],
                        frequencies: Sequence[float]) -> GeneralStationary:
    """Diagonal kernel W_ii(t) = A_i e^{-k_i t} cos(nu_i t), the config-file 'general' variant."""
    amplitudes = np.asarray(amplitudes, dtype=float)
    decays = np.asarray(decays, dtype=float)
    frequencies = np.asarray(frequencies, dtype=float)
    if amplitudes.shape != (3,) or decays.shape != (3,) or frequencies.shape != (3,):
        raise ValidationError("Damped-cosine kernel needs three amplitudes, decays and frequencies")
    if np.any(amplitudes < 0) or np.any(decays <= 0):
        raise ValidationError("Damped-cosine kernel needs amplitudes >= 0 and decays > 0")

    def covariance(t: float) -> np.ndarray:
        return np.diag(amplitudes * np.exp(-decays * t) * np.cos(frequencies * t))

    return GeneralStationary(
        covariance_fn=covariance,
        envelope_amplitude=float(amplitudes.max()),
        envelope_decay=float(decays.min()),
        label="damped-cosine",
    )


def covariance_at(model: NoiseModel, t: float) -> np.ndarray:
    """W(t) for non-white models; negative lags use W(-t) = W(t)^T."""
    if isinstance(model, WhiteNoise):
        raise UnsupportedVariantError("White noise has a delta covariance; use white_strength() instead")
    lag = abs(t)
    if isinstance(model, DiagonalExp):
        w = np.diag([model.w1 * np.exp(-model.lam * lag),
                     model.w1 * np.exp(-model.lam * lag),
                     model.w3 * np.exp(-model.mu * lag)])
    elif isinstance(model, SingleAxisExp):
        w = np.diag([model.w * np.exp(-model.lam * lag), 0.0, 0.0])
    elif isinstance(model, GeneralStationary):
        w = np.asarray(model.covariance_fn(lag), dtype=float)
        if w.shape != (3, 3):
            raise ValidationError(f"Covariance function returned shape {w.shape}, expected (3, 3)")
    else:
        raise UnsupportedVariantError(f"Unknown noise model {type(model).__name__}")
    return w.T if t < 0 else w


def white_strength(model: NoiseModel) -> np.ndarray:
    if not isinstance(model, WhiteNoise):
        raise UnsupportedVariantError(f"white_strength() needs WhiteNoise, got {type(model).__name__}")
    return model.strength.copy()


def max_dissipation_scale(model: NoiseModel) -> float:
    """Rough size of the induced rates, used for weak-coupling warnings."""
    if isinstance(model, WhiteNoise):
        return model.max_rate
    return model.envelope_amplitude / model.envelope_decay


def correlation_rate(model: NoiseModel) -> float:
    """Inverse correlation time of the slowest component (inf for white noise)."""
    if isinstance(model, WhiteNoise):
        return float("inf")
    return model.envelope_decay
