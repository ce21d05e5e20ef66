"""Monte Carlo comparison of the trajectory average against the master equation."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.config.config import (
    CPLAB_THREADS,
    ORACLE_BUDGET_FLOOR,
    ORACLE_CHUNK_SIZE,
    ORACLE_SIGMA_FACTOR,
    RK4_STEPS_PER_PERIOD,
    WEAK_COUPLING_RATIO,
)
from src.services.bloch_core import to_bloch
from src.services.dynamics.propagator import propagator_series
from src.services.generator.params import GeneratorParams
from src.services.noise.models import NoiseModel, correlation_rate
from src.services.noise.sampling import sample_batch, uniform_grid
from src.utils.error_utils import ValidationError
from src.utils.io_utils import write_csv
from .integrator import integrate_bloch_batch

logger = logging.getLogger(__name__)

DUMP_LIMIT = 16


@dataclass(frozen=True, eq=False)
class OracleReport:
    """Averaged spatial Bloch trajectory, its standard errors and the master-equation reference."""
    times: np.ndarray
    mean: np.ndarray
    standard_error: np.ndarray
    reference: np.ndarray
    tolerance: np.ndarray
    statistical_budget: np.ndarray
    truncation_budget: np.ndarray
    max_deviation: float
    max_deviation_time: float
    min_eigenvalue: float
    trajectories: int
    seed: int
    step: float

    @property
    def deviation(self) -> np.ndarray:
        return np.abs(self.mean - self.reference)

    @property
    def within_budget(self) -> bool:
        return bool(np.all(self.deviation <= self.tolerance))

    @property
    def is_physical(self) -> bool:
        """Averaged states are PSD within the statistical error."""
        return self.min_eigenvalue >= -ORACLE_SIGMA_FACTOR * float(self.standard_error.max())

    @property
    def verdict(self) -> str:
        return "within budget" if self.within_budget else "outside budget"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "trajectories": self.trajectories,
            "seed": self.seed,
            "step": self.step,
            "max_deviation": self.max_deviation,
            "max_deviation_time": self.max_deviation_time,
            "max_standard_error": float(self.standard_error.max()),
            "max_statistical_budget": float(self.statistical_budget.max()),
            "max_truncation_budget": float(self.truncation_budget.max()),
            "min_eigenvalue": self.min_eigenvalue,
            "physical": self.is_physical,
            "times": self.times,
            "mean": self.mean,
            "standard_error": self.standard_error,
            "reference": self.reference,
        }


def default_step(omega0: float) -> float:
    """(2 pi / omega0) / 200, or 0.01 without a bare precession."""
    if omega0 == 0:
        return 0.01
    return 2.0 * math.pi / abs(omega0) / RK4_STEPS_PER_PERIOD


def _warn_weak_coupling(model: NoiseModel, omega0: float, p: GeneratorParams):
    rate = p.dissipation_scale
    if omega0 != 0 and rate > WEAK_COUPLING_RATIO * abs(omega0):
        logger.warning(f"Dissipation {rate:.3g} is not small against omega0={omega0:.3g}; "
                       f"agreement is only expected to second order")
    lam = correlation_rate(model)
    if math.isfinite(lam) and rate > WEAK_COUPLING_RATIO * lam:
        logger.warning(f"Dissipation {rate:.3g} is not small against the correlation rate {lam:.3g}")


def _chunks(n: int, size: int) -> List[range]:
    return [range(start, min(start + size, n)) for start in range(0, n, size)]


def _run_chunk(model: NoiseModel, omega0: float, grid: np.ndarray, r0: np.ndarray, seed: int,
               indices: range, keep: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    fields = sample_batch(model, grid, seed, indices)
    paths = integrate_bloch_batch(omega0, grid[1] - grid[0], fields, r0)
    return paths.sum(axis=0), (paths ** 2).sum(axis=0), paths[:keep]


def mc_compare(model: NoiseModel, omega0: float, p: GeneratorParams, rho0: np.ndarray, horizon: float,
               n: int, seed: int, step: Optional[float] = None, threads: Optional[int] = None,
               dump: Optional[str] = None) -> OracleReport:
    """Averages n trajectories on [0, horizon] and compares with the semigroup evolution of rho0."""
    if n < 2:
        raise ValidationError(f"Oracle needs at least two trajectories, got {n}")
    step = default_step(omega0) if step is None else float(step)
    grid = uniform_grid(horizon, step)
    v0 = to_bloch(rho0)
    _warn_weak_coupling(model, omega0, p)

    chunks = _chunks(n, ORACLE_CHUNK_SIZE)
    workers = max(1, min(threads or CPLAB_THREADS, len(chunks)))
    keep = DUMP_LIMIT if dump else 0
    logger.info(f"Oracle: {n} trajectories, {len(grid)} grid points, {len(chunks)} chunks on {workers} threads")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_chunk, model, omega0, grid, v0[1:], seed, chunk, keep if i == 0 else 0)
                   for i, chunk in enumerate(chunks)]
        results = [f.result() for f in futures]

    # reduce in chunk order so the totals do not depend on scheduling
    total = np.zeros((len(grid), 3))
    total_sq = np.zeros((len(grid), 3))
    for chunk_sum, chunk_sq, _ in results:
        total += chunk_sum
        total_sq += chunk_sq
    mean = total / n
    variance = np.clip((total_sq / n - mean ** 2) * n / (n - 1), 0.0, None)
    standard_error = np.sqrt(variance / n)

    reference = np.array([g.apply(v0)[1:] for g in propagator_series(p, grid)])
    deviation = np.abs(mean - reference)
    # sampling noise and the memory transient of the Markov limit add up
    statistical = ORACLE_SIGMA_FACTOR * standard_error
    truncation = np.repeat((ORACLE_BUDGET_FLOOR + (p.dissipation_scale * grid) ** 2)[:, np.newaxis], 3, axis=1)
    worst = np.unravel_index(np.argmax(deviation), deviation.shape)

    if dump:
        sample = results[0][2]
        write_csv(["trajectory", "t", "rho1", "rho2", "rho3"],
                  ([i, grid[k], *sample[i, k]] for i in range(sample.shape[0]) for k in range(len(grid))),
                  dump)

    report = OracleReport(
        times=grid,
        mean=mean,
        standard_error=standard_error,
        reference=reference,
        tolerance=statistical + truncation,
        statistical_budget=statistical,
        truncation_budget=truncation,
        max_deviation=float(deviation[worst]),
        max_deviation_time=float(grid[worst[0]]),
        min_eigenvalue=float(0.5 - np.linalg.norm(mean, axis=1).max()),
        trajectories=n,
        seed=seed,
        step=step,
    )
    logger.info(f"Oracle {report.verdict}: max deviation {report.max_deviation:.3e} "
                f"at t={report.max_deviation_time:.4g}")
    return report
