"""`generator` subcommand: Markov matrices, generator parameters and positivity verdict."""

import logging

import numpy as np

from src.config.config_loader import RunConfig
from src.services.generator import (
    MarkovMatrices,
    bloch_generator,
    l_d_from_params,
    lindblad_operators,
    markov_matrices,
)
from src.services.positivity import classify
from src.utils.error_utils import NoLindbladFormError
from .helpers import CommandResult

logger = logging.getLogger(__name__)


def _matrices(config: RunConfig) -> MarkovMatrices:
    if config.direct_params is not None:
        p = config.direct_params
        return MarkovMatrices(c_a=np.zeros((3, 3)), l_d=l_d_from_params(p), omega0=config.omega0)
    return markov_matrices(config.noise, config.omega0)


def cmd_generator(config: RunConfig) -> CommandResult:
    matrices = _matrices(config)
    params = config.generator_params()
    verdict = classify(params)
    logger.info(f"Generator verdict: {verdict.verdict.value}")

    payload = {
        "run": config.summary(),
        "C_A": matrices.c_a,
        "L_D": matrices.l_d,
        "params": params.to_dict(),
        "bloch_generator": bloch_generator(params),
        "verdict": verdict.to_dict(),
    }
    try:
        payload["lindblad_operators"] = lindblad_operators(matrices)
    except NoLindbladFormError as e:
        logger.info(f"No Lindblad operators: {e}")
        payload["lindblad_operators"] = None
    return CommandResult(payload=payload, json_only=True)
