"""`tomography` subcommand: virtual measurement record and linear-inversion reconstruction."""

import logging

import numpy as np

from src.config.config_loader import RunConfig
from src.services.bloch_core import coefficients_from_state, state_eigenvalues, state_from_coefficients
from src.services.dynamics import evolve_extended
from src.services.tomography import reconstruct, simulate_record
from .helpers import CommandResult, beam_state

logger = logging.getLogger(__name__)


def cmd_tomography(config: RunConfig) -> CommandResult:
    p = config.generator_params()
    state = evolve_extended(p, beam_state(config), config.tomography_time)
    shots = config.tomography_shots if config.tomography_mode == "shots" else None
    record = simulate_record(state, shots=shots, seed=config.tomography_seed)
    if not record.is_physical:
        logger.warning("Some expectations fall outside [0, 1]; the evolved state is not physical")

    coefficients = reconstruct(record)
    exact = coefficients_from_state(state)
    error = float(np.abs(coefficients - exact).max())
    logger.info(f"Reconstruction max entry error {error:.3e} ({config.tomography_mode} mode)")

    header = ["i", "j", "re", "im", "exact_re", "exact_im"]
    rows = [[i + 1, j + 1, coefficients[i, j].real, coefficients[i, j].imag, exact[i, j].real, exact[i, j].imag]
            for i in range(4) for j in range(4)]
    payload = {
        "run": config.summary(),
        "time": config.tomography_time,
        "mode": config.tomography_mode,
        "shots": shots,
        "max_error": error,
        "reconstructed_eigenvalues": state_eigenvalues(state_from_coefficients(coefficients)),
        "record": [list(r) for r in record.rows()],
    }
    return CommandResult(header=header, rows=rows, payload=payload)
