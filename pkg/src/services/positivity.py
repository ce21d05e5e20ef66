"""Positivity and complete-positivity classification of Bloch generators.

Positivity of the semigroup needs M = [[a,b,c],[b,alpha,beta],[c,beta,gamma]] to be
positive semidefinite. Complete positivity needs the Kossakowski matrix L_D to be
positive semidefinite: its seven principal minors are reported and must hold, and
its smallest eigenvalue decides near the boundary, where minors of a small block
can sit inside the tolerance while an eigenvalue does not. Both tests run on the
dissipation rescaled to max|param| = 1 with tolerance PSD_TOL, so verdicts do not
depend on the overall rate scale; margins are reported in the original units.
"""

import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Tuple

import numpy as np

from src.config.config import CONSISTENCY_BAND, PSD_TOL
from src.services.generator.params import DISSIPATION_FIELDS, GeneratorParams, l_d_from_params
from src.utils.error_utils import ConsistencyError

logger = logging.getLogger(__name__)


class PositivityClass(str, enum.Enum):
    COMPLETELY_POSITIVE = "CompletelyPositive"
    POSITIVE_NOT_CP = "PositiveNotCP"
    NOT_POSITIVE = "NotPositive"


@dataclass(frozen=True)
class PositivityVerdict:
    verdict: PositivityClass
    positivity_margin: float
    cp_margin: float
    inequalities: Dict[str, float] = field(default_factory=dict)

    @property
    def is_positive(self) -> bool:
        return self.verdict is not PositivityClass.NOT_POSITIVE

    @property
    def is_cp(self) -> bool:
        return self.verdict is PositivityClass.COMPLETELY_POSITIVE

    def to_dict(self) -> dict:
        return {
            "class": self.verdict.value,
            "positivity_margin": self.positivity_margin,
            "cp_margin": self.cp_margin,
            "inequalities": dict(self.inequalities),
        }




def _normalized(p: GeneratorParams) -> GeneratorParams:
    """Dissipation divided by max|param|; the zero generator is returned unchanged."""
    s = p.dissipation_scale
    if s == 0.0:
        return p
    return replace(p, **{f: getattr(p, f) / s for f in DISSIPATION_FIELDS})


def cp_inequalities(p: GeneratorParams) -> Dict[str, float]:
    """Values of the seven principal minors of L_D (each must be >= 0 for CP)."""
    r = 0.5 * (p.alpha + p.gamma - p.a)
    s = 0.5 * (p.a + p.gamma - p.alpha)
    t = 0.5 * (p.a + p.alpha - p.gamma)
    b, c, beta = p.b, p.c, p.beta
    return {
        "R": r,
        "S": s,
        "T": t,
        "RS-b2": r * s - b ** 2,
        "RT-c2": r * t - c ** 2,
        "ST-beta2": s * t - beta ** 2,
        "det": r * s * t - 2 * b * c * beta - r * beta ** 2 - s * c ** 2 - t * b ** 2,
    }


def _positive_unit(q: GeneratorParams) -> Tuple[bool, float]:
    margin = float(np.linalg.eigvalsh(q.dissipation_matrix).min())
    return margin >= -PSD_TOL, margin


def _cp_unit(q: GeneratorParams) -> bool:
    minors_hold = all(v >= -PSD_TOL for v in cp_inequalities(q).values())
    return minors_hold and float(np.linalg.eigvalsh(l_d_from_params(q)).min()) >= -PSD_TOL


def check_positive(p: GeneratorParams) -> Tuple[bool, float]:
    """(M is PSD within tolerance, min eigenvalue of M)."""
    ok, _ = _positive_unit(_normalized(p))
    return ok, float(np.linalg.eigvalsh(p.dissipation_matrix).min())


def check_cp(p: GeneratorParams) -> Tuple[bool, float]:
    """(L_D is PSD within tolerance by minors and spectrum, min eigenvalue of L_D)."""
    return _cp_unit(_normalized(p)), float(np.linalg.eigvalsh(l_d_from_params(p)).min())


def classify(p: GeneratorParams) -> PositivityVerdict:
    q = _normalized(p)
    positive, unit_margin = _positive_unit(q)
    cp = _cp_unit(q)
    positivity_margin = float(np.linalg.eigvalsh(p.dissipation_matrix).min())
    cp_margin = float(np.linalg.eigvalsh(l_d_from_params(p)).min())
    if cp and not positive:
        if unit_margin < -CONSISTENCY_BAND * PSD_TOL:
            raise ConsistencyError(
                f"Generator passes the CP test but fails positivity (margin {positivity_margin:.3e})")
        positive = True
    if cp:
        verdict = PositivityClass.COMPLETELY_POSITIVE
    elif positive:
        verdict = PositivityClass.POSITIVE_NOT_CP
    else:
        verdict = PositivityClass.NOT_POSITIVE
    logger.debug(f"Classified generator as {verdict.value} (P margin {positivity_margin:.3e}, CP margin {cp_margin:.3e})")
    return PositivityVerdict(
        verdict=verdict,
        positivity_margin=positivity_margin,
        cp_margin=cp_margin,
        inequalities=cp_inequalities(p),
    )
