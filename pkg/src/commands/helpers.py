"""Shared plumbing for subcommands: result container and CSV/JSON emission."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.config.config_loader import RunConfig
from src.services.bloch_core import from_bloch
from src.services.interferometer.beam import SINGLET_AMPLITUDES, prepare_beam
from src.utils.io_utils import write_csv, write_json

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_BUDGET = 4


@dataclass
class CommandResult:
    """A table (header + rows) and/or a JSON payload produced by one subcommand."""
    header: Optional[List[str]] = None
    rows: Optional[List[Sequence[Any]]] = None
    payload: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = EXIT_OK
    json_only: bool = False


def emit(result: CommandResult, config: RunConfig):
    """Writes the result to config.out (stdout when unset) in the configured format."""
    if result.json_only or config.format == "json" or result.header is None:
        payload = dict(result.payload)
        if result.header is not None:
            payload["columns"] = result.header
            payload["rows"] = result.rows
        write_json(payload, config.out)
    else:
        write_csv(result.header, result.rows, config.out)


def beam_state(config: RunConfig) -> np.ndarray:
    return prepare_beam(*config.beam_amplitudes)


def is_singlet_beam(config: RunConfig) -> bool:
    return np.allclose(config.beam_amplitudes, SINGLET_AMPLITUDES, rtol=0.0, atol=1e-12)


def initial_spin_state(config: RunConfig) -> np.ndarray:
    """rho = (1 + r.sigma)/2 for the configured Bloch vector r (|r| <= 1)."""
    r = np.asarray(config.initial_spin, dtype=float)
    return from_bloch(np.concatenate(([0.5], 0.5 * r)))


def hermitian_entries(rho: np.ndarray) -> List[float]:
    """Real parametrization of a hermitian matrix: diagonal, then Re/Im of the upper triangle."""
    n = rho.shape[0]
    out = [float(rho[i, i].real) for i in range(n)]
    for i in range(n):
        for k in range(i + 1, n):
            out.extend([float(rho[i, k].real), float(rho[i, k].imag)])
    return out


def hermitian_entry_names(prefix: str, n: int) -> List[str]:
    names = [f"{prefix}_{i}{i}" for i in range(n)]
    for i in range(n):
        for k in range(i + 1, n):
            names.extend([f"re_{prefix}_{i}{k}", f"im_{prefix}_{i}{k}"])
    return names
