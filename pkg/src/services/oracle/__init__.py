"""Stochastic-trajectory oracle for the Markovian master equation.

Provides:
- Fixed-step RK4 integration of single realizations and batches.
- Ensemble averaging and comparison against the semigroup propagator.
"""

from .integrator import check_step, integrate_bloch_batch, integrate_trajectory
from .compare import DUMP_LIMIT, OracleReport, default_step, mc_compare

__all__ = [
    'check_step',
    'integrate_bloch_batch',
    'integrate_trajectory',
    'DUMP_LIMIT',
    'OracleReport',
    'default_step',
    'mc_compare',
]
