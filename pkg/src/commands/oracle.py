"""`oracle` subcommand: stochastic trajectories against the master equation."""

import logging

from src.config.config_loader import RunConfig
from src.services.oracle import mc_compare
from .helpers import EXIT_BUDGET, EXIT_OK, CommandResult, initial_spin_state

logger = logging.getLogger(__name__)


def cmd_oracle(config: RunConfig) -> CommandResult:
    report = mc_compare(
        config.noise,
        config.omega0,
        config.generator_params(),
        initial_spin_state(config),
        config.horizon,
        config.oracle_trajectories,
        config.oracle_seed,
        step=config.oracle_step,
        threads=config.oracle_threads,
        dump=config.dump_trajectories,
    )
    header = ["t", "mean1", "mean2", "mean3", "se1", "se2", "se3", "ref1", "ref2", "ref3", "tolerance"]
    rows = [[report.times[k], *report.mean[k], *report.standard_error[k], *report.reference[k],
             float(report.tolerance[k].min())]
            for k in range(len(report.times))]
    payload = {"run": config.summary(), **report.to_dict()}
    exit_code = EXIT_OK if report.within_budget else EXIT_BUDGET
    if exit_code != EXIT_OK:
        logger.warning(f"Oracle deviation {report.max_deviation:.3e} at t={report.max_deviation_time:.4g} "
                       f"is outside the budget")
    return CommandResult(header=header, rows=rows, payload=payload, exit_code=exit_code)
