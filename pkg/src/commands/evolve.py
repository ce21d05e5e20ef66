"""`evolve` subcommand: spin Bloch series or entangled state series with its spectrum."""

import logging

import numpy as np

from src.config.config_loader import RunConfig
from src.services.bloch_core import state_eigenvalues, to_bloch
from src.services.dynamics import apply_extended, propagator_series, scan_grid
from .helpers import CommandResult, beam_state, hermitian_entries, hermitian_entry_names, initial_spin_state

logger = logging.getLogger(__name__)


def cmd_evolve(config: RunConfig) -> CommandResult:
    p = config.generator_params()
    times = scan_grid(config.horizon, config.steps)
    series = propagator_series(p, times)

    if config.evolve_mode == "spin":
        v0 = to_bloch(initial_spin_state(config))
        header = ["t", "rho0", "rho1", "rho2", "rho3"]
        rows = [[g.t, *g.apply(v0)] for g in series]
        return CommandResult(header=header, rows=rows, payload={"run": config.summary(), "mode": "spin"})

    rho2 = beam_state(config)
    header = ["t"] + hermitian_entry_names("rho", 4) + [f"lambda{k}" for k in range(1, 5)]
    rows = []
    minimum = (np.inf, 0.0)
    for g in series:
        state = apply_extended(g, rho2)
        spectrum = state_eigenvalues(state)
        if spectrum[-1] < minimum[0]:
            minimum = (float(spectrum[-1]), g.t)
        rows.append([g.t] + hermitian_entries(state) + list(spectrum))
    if minimum[0] < -1e-10:
        logger.warning(f"Evolved state has eigenvalue {minimum[0]:.6g} at t={minimum[1]:.6g}; "
                       f"the extended map is not positive")
    return CommandResult(header=header, rows=rows, payload={
        "run": config.summary(),
        "mode": "entangled",
        "min_eigenvalue": minimum[0],
        "min_eigenvalue_time": minimum[1],
    })
