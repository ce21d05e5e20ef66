"""Bloch-space generator parameters and the 4x4 matrix H + D they define."""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from src.config.config import SHAPE_TOL
from src.utils.error_utils import ValidationError
from .matrices import MarkovMatrices

logger = logging.getLogger(__name__)

DISSIPATION_FIELDS = ("a", "b", "c", "alpha", "beta", "gamma")


@dataclass(frozen=True)
class GeneratorParams:
    """Hamiltonian vector (h1, h2, h3) and dissipation parameters (a, b, c, alpha, beta, gamma).

    The Bloch flow is d(rho^k)/dt = 2 (h x rho)_k - 2 (M rho)_k with
    M = [[a, b, c], [b, alpha, beta], [c, beta, gamma]].
    """
    h1: float = 0.0
    h2: float = 0.0
    h3: float = 0.0
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    omega0: Optional[float] = None

    def __post_init__(self):
        values = [self.h1, self.h2, self.h3] + [getattr(self, f) for f in DISSIPATION_FIELDS]
        if not all(math.isfinite(v) for v in values):
            raise ValidationError("Generator parameters must be finite")

    @classmethod
    def diagonal(cls, a: float, gamma: float, omega: float) -> "GeneratorParams":
        """Uncorrelated-field shape: M = diag(a, a, gamma), rotation at omega."""
        return cls(h3=omega / 2.0, a=a, alpha=a, gamma=gamma)

    @classmethod
    def single_axis(cls, b: float, gamma: float, omega: float) -> "GeneratorParams":
        """Single-component shape: a = c = beta = 0, alpha = gamma."""
        return cls(h3=omega / 2.0, b=b, alpha=gamma, gamma=gamma)

    @property
    def omega(self) -> float:
        """Precession frequency 2*h3."""
        return 2.0 * self.h3

    @property
    def delta_omega(self) -> Optional[float]:
        if self.omega0 is None:
            return None
        return 2.0 * self.h3 - self.omega0

    @property
    def t1(self) -> float:
        return 1.0 / (2.0 * self.gamma) if self.gamma > 0 else math.inf

    @property
    def t2(self) -> float:
        return 1.0 / (2.0 * self.a) if self.a > 0 else math.inf

    @property
    def hamiltonian(self) -> np.ndarray:
        return np.array([self.h1, self.h2, self.h3])

    @property
    def dissipation_matrix(self) -> np.ndarray:
        """M = [[a, b, c], [b, alpha, beta], [c, beta, gamma]]."""
        return np.array([
            [self.a, self.b, self.c],
            [self.b, self.alpha, self.beta],
            [self.c, self.beta, self.gamma],
        ])

    @property
    def dissipation(self) -> tuple:
        return tuple(getattr(self, f) for f in DISSIPATION_FIELDS)

    @property
    def dissipation_scale(self) -> float:
        return max(abs(v) for v in self.dissipation)

    def scaled_dissipation(self, factor: float) -> "GeneratorParams":
        return replace(self, **{f: factor * getattr(self, f) for f in DISSIPATION_FIELDS})

    def without_lamb_shift(self) -> "GeneratorParams":
        if self.omega0 is None:
            raise ValidationError("Cannot drop the frequency shift without a known omega0")
        return replace(self, h1=0.0, h2=0.0, h3=self.omega0 / 2.0)

    def is_diagonal_shape(self, tol: float = SHAPE_TOL) -> bool:
        s = max(1.0, self.dissipation_scale)
        return (abs(self.b) <= tol * s and abs(self.c) <= tol * s and abs(self.beta) <= tol * s
                and abs(self.a - self.alpha) <= tol * s
                and abs(self.h1) <= tol * s and abs(self.h2) <= tol * s)

    def is_single_axis_shape(self, tol: float = SHAPE_TOL) -> bool:
        s = max(1.0, self.dissipation_scale)
        return (abs(self.a) <= tol * s and abs(self.c) <= tol * s and abs(self.beta) <= tol * s
                and abs(self.alpha - self.gamma) <= tol * s
                and abs(self.h1) <= tol * s and abs(self.h2) <= tol * s)

    def to_dict(self) -> dict:
        out = {f: getattr(self, f) for f in ("h1", "h2", "h3") + DISSIPATION_FIELDS}
        out["omega0"] = self.omega0
        out["delta_omega"] = self.delta_omega
        out["T1"] = self.t1
        out["T2"] = self.t2
        return out


def params_from_matrices(m: MarkovMatrices, include_lamb_shift: bool = True) -> GeneratorParams:
    """Inverts the (a, b, c, alpha, beta, gamma) <-> L_D map and folds C_A into h."""
    l_d, c_a = m.l_d, m.c_a
    if include_lamb_shift:
        # h_k = (omega0/2) delta_k3 + sum_ij C^A_ij eps_ijk
        h1 = 2.0 * c_a[1, 2]
        h2 = 2.0 * c_a[2, 0]
        h3 = m.omega0 / 2.0 + 2.0 * c_a[0, 1]
    else:
        h1, h2, h3 = 0.0, 0.0, m.omega0 / 2.0
    params = GeneratorParams(
        h1=h1, h2=h2, h3=h3,
        a=l_d[1, 1] + l_d[2, 2],
        b=-l_d[0, 1],
        c=-l_d[0, 2],
        alpha=l_d[0, 0] + l_d[2, 2],
        beta=-l_d[1, 2],
        gamma=l_d[0, 0] + l_d[1, 1],
        omega0=m.omega0,
    )
    logger.debug(f"Generator params: delta_omega={params.delta_omega}, T1={params.t1:.6g}, T2={params.t2:.6g}")
    return params


def l_d_from_params(p: GeneratorParams) -> np.ndarray:
    """Kossakowski matrix [[R, -b, -c], [-b, S, -beta], [-c, -beta, T]] for given parameters."""
    r = 0.5 * (p.alpha + p.gamma - p.a)
    s = 0.5 * (p.a + p.gamma - p.alpha)
    t = 0.5 * (p.a + p.alpha - p.gamma)
    return np.array([
        [r, -p.b, -p.c],
        [-p.b, s, -p.beta],
        [-p.c, -p.beta, t],
    ])


def hamiltonian_block(p: GeneratorParams) -> np.ndarray:
    """3x3 block of H: v -> 2 h x v."""
    h1, h2, h3 = p.h1, p.h2, p.h3
    return 2.0 * np.array([
        [0.0, -h3, h2],
        [h3, 0.0, -h1],
        [-h2, h1, 0.0],
    ])


def bloch_generator(p: GeneratorParams) -> np.ndarray:
    """4x4 matrix H + D acting on (rho^0, rho^1, rho^2, rho^3)."""
    g = np.zeros((4, 4))
    g[1:, 1:] = hamiltonian_block(p) - 2.0 * p.dissipation_matrix
    return g


@dataclass(frozen=True)
class RelaxationRates:
    longitudinal: float   # population relaxation, 1/T1
    transverse: float     # coherence decay
    frequency: float      # precession frequency of the coherences

    @property
    def t1(self) -> float:
        return 1.0 / self.longitudinal if self.longitudinal > 0 else math.inf

    @property
    def t2(self) -> float:
        return 1.0 / self.transverse if self.transverse > 0 else math.inf


def bloch_redfield_rates(p: GeneratorParams) -> RelaxationRates:
    """Component-wise relaxation rates: rho^3 decays at 2*gamma, rho^1,2 at a + alpha."""
    if not (p.is_diagonal_shape() or p.is_single_axis_shape()):
        raise ValidationError("Bloch-Redfield rates are defined for the diagonal and single-axis shapes only")
    return RelaxationRates(longitudinal=2.0 * p.gamma, transverse=p.a + p.alpha, frequency=p.omega)
