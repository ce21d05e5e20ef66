import configparser
import logging
import math
import os
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.services.generator import markov_matrices, params_from_matrices
from src.services.generator.params import GeneratorParams
from src.services.interferometer.analytic import CASES
from src.services.interferometer.beam import SINGLET_AMPLITUDES
from src.services.interferometer.correlators import ChshConfig, optimal_chsh_config
from src.services.noise.models import (
    DiagonalExp,
    NoiseModel,
    SingleAxisExp,
    WhiteNoise,
    damped_cosine_model,
)
from src.utils.error_utils import CplabError, ConfigError
from .config import CPLAB_CONFIG, DEFAULT_SCAN_STEPS, ORACLE_TRAJECTORIES

logger = logging.getLogger(__name__)

NOISE_VARIANTS = ("none", "white", "diagonal", "single-axis", "general")
EVOLVE_MODES = ("spin", "entangled")
OUTPUT_FORMATS = ("csv", "json")
TOMOGRAPHY_MODES = ("exact", "shots")
GENERATOR_FIELDS = ("h1", "h2", "h3", "a", "b", "c", "alpha", "beta", "gamma")


@dataclass
class Overrides:
    """Command-line values that take precedence over the config file."""
    out: Optional[str] = None
    format: Optional[str] = None
    seed: Optional[int] = None
    horizon: Optional[float] = None
    steps: Optional[int] = None
    no_lamb_shift: bool = False
    dump_trajectories: Optional[str] = None


class RunConfig:
    """One run of a cplab subcommand, parsed from an INI file plus overrides."""
    def __init__(self, path: str = CPLAB_CONFIG):
        self.path = path
        self._parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))

        # --- Physics ---
        self.noise_variant: str = "none"
        self.noise: Optional[NoiseModel] = None
        self.omega0: float = 1.0
        self.include_lamb_shift: bool = True
        self.direct_params: Optional[GeneratorParams] = None

        # --- Time grid and initial states ---
        self.horizon: float = 10.0
        self.steps: int = DEFAULT_SCAN_STEPS
        self.evolve_mode: str = "entangled"
        self.initial_spin: np.ndarray = np.zeros(3)
        self.beam_amplitudes: Tuple[complex, complex] = SINGLET_AMPLITUDES

        # --- Measurements ---
        self.chsh: ChshConfig = optimal_chsh_config()
        self.analytic_case: Optional[str] = None
        self.tomography_mode: str = "exact"
        self.tomography_shots: Optional[int] = None
        self.tomography_time: float = 0.0
        self.tomography_seed: int = 0

        # --- Oracle ---
        self.oracle_trajectories: int = ORACLE_TRAJECTORIES
        self.oracle_seed: int = 0
        self.oracle_step: Optional[float] = None
        self.oracle_threads: Optional[int] = None

        # --- Output ---
        self.out: Optional[str] = None
        self.format: str = "csv"
        self.dump_trajectories: Optional[str] = None

    # --- Raw value helpers ---
    def _raw(self, section: str, key: str) -> Optional[str]:
        if not self._parser.has_section(section) or not self._parser.has_option(section, key):
            return None
        value = self._parser.get(section, key).strip()
        return value or None

    def _float(self, section: str, key: str, default: Optional[float] = None, required: bool = False) -> float:
        raw = self._raw(section, key)
        if raw is None:
            if required:
                raise ConfigError("Missing required value", section, key)
            return default
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"Expected a number, got '{raw}'", section, key) from None
        if not math.isfinite(value):
            raise ConfigError(f"Value must be finite, got '{raw}'", section, key)
        return value

    def _int(self, section: str, key: str, default: Optional[int] = None) -> Optional[int]:
        raw = self._raw(section, key)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"Expected an integer, got '{raw}'", section, key) from None

    def _bool(self, section: str, key: str, default: bool) -> bool:
        if self._raw(section, key) is None:
            return default
        try:
            return self._parser.getboolean(section, key)
        except ValueError:
            raise ConfigError(f"Expected true/false, got '{self._raw(section, key)}'", section, key) from None

    def _complex(self, section: str, key: str, default: complex) -> complex:
        raw = self._raw(section, key)
        if raw is None:
            return default
        try:
            return complex(raw.replace(" ", ""))
        except ValueError:
            raise ConfigError(f"Expected a complex number like 0.6+0.8j, got '{raw}'", section, key) from None

    def _vector(self, section: str, key: str, size: int = 3, default: Optional[List[float]] = None,
                required: bool = False) -> Optional[np.ndarray]:
        raw = self._raw(section, key)
        if raw is None:
            if required:
                raise ConfigError("Missing required value", section, key)
            return None if default is None else np.array(default, dtype=float)
        try:
            values = [float(x) for x in raw.split(",")]
        except ValueError:
            raise ConfigError(f"Expected {size} comma-separated numbers, got '{raw}'", section, key) from None
        if len(values) != size:
            raise ConfigError(f"Expected {size} comma-separated numbers, got {len(values)}", section, key)
        return np.array(values)

    def _choice(self, section: str, key: str, choices: Tuple[str, ...], default: str) -> str:
        raw = self._raw(section, key)
        if raw is None:
            return default
        value = raw.lower()
        if value not in choices:
            raise ConfigError(f"Unknown value '{raw}' (expected one of {', '.join(choices)})", section, key)
        return value

    # --- Sections ---
    def _load_noise(self):
        section = "noise"
        self.noise_variant = self._choice(section, "variant", NOISE_VARIANTS, "none")
        try:
            if self.noise_variant == "none":
                self.noise = WhiteNoise(np.zeros((3, 3)))
            elif self.noise_variant == "white":
                raw = self._raw(section, "strength")
                if raw is not None and "," in raw:
                    strength = self._vector(section, "strength", size=9).reshape(3, 3)
                else:
                    strength = self._float(section, "strength", required=True) * np.eye(3)
                self.noise = WhiteNoise(strength)
            elif self.noise_variant == "diagonal":
                self.noise = DiagonalExp(
                    g=self._float(section, "g", required=True),
                    b1=self._float(section, "b1", required=True),
                    b3=self._float(section, "b3", required=True),
                    lam=self._float(section, "lambda", required=True),
                    mu=self._float(section, "mu", required=True),
                )
            elif self.noise_variant == "single-axis":
                self.noise = SingleAxisExp(
                    g=self._float(section, "g", required=True),
                    b=self._float(section, "b", required=True),
                    lam=self._float(section, "lambda", required=True),
                )
            else:
                self.noise = damped_cosine_model(
                    self._vector(section, "amplitudes", required=True),
                    self._vector(section, "decays", required=True),
                    self._vector(section, "frequencies", default=[0.0, 0.0, 0.0]),
                )
        except ConfigError:
            raise
        except CplabError as e:
            raise ConfigError(str(e), section) from e
        logger.info(f"Noise model: {self.noise_variant}")

    def _load_system(self):
        section = "system"
        self.omega0 = self._float(section, "omega0", default=1.0)
        self.include_lamb_shift = self._bool(section, "include_lamb_shift", True)
        logger.debug(f"omega0={self.omega0}, lamb shift {'on' if self.include_lamb_shift else 'off'}")

    def _load_generator(self):
        """Optional direct parameters; they bypass the noise model."""
        section = "generator"
        if not self._parser.has_section(section):
            return
        values = {f: self._float(section, f, default=0.0) for f in GENERATOR_FIELDS}
        if self._raw(section, "h3") is None:
            values["h3"] = self.omega0 / 2.0
        try:
            self.direct_params = GeneratorParams(**values, omega0=self.omega0)
        except CplabError as e:
            raise ConfigError(str(e), section) from e
        logger.info("Generator parameters given directly; noise model only feeds the oracle")

    def _load_time(self):
        section = "time"
        self.horizon = self._float(section, "horizon", default=self.horizon)
        self.steps = self._int(section, "steps", default=self.steps)

    def _load_evolve(self):
        section = "evolve"
        self.evolve_mode = self._choice(section, "mode", EVOLVE_MODES, self.evolve_mode)
        self.initial_spin = self._vector(section, "initial_spin", default=[0.0, 0.0, 1.0])
        if np.linalg.norm(self.initial_spin) > 1.0 + 1e-12:
            raise ConfigError("Initial spin Bloch vector must have length <= 1", section, "initial_spin")

    def _load_beam(self):
        section = "beam"
        p = self._complex(section, "p", SINGLET_AMPLITUDES[0])
        q = self._complex(section, "q", SINGLET_AMPLITUDES[1])
        if abs(abs(p) ** 2 + abs(q) ** 2 - 1.0) > 1e-12:
            raise ConfigError(f"Beam amplitudes must satisfy |p|^2 + |q|^2 = 1 (got {abs(p) ** 2 + abs(q) ** 2:.15g})",
                              section)
        self.beam_amplitudes = (p, q)

    def _load_chsh(self):
        section = "chsh"
        if not self._parser.has_section(section):
            return
        default = optimal_chsh_config()
        try:
            self.chsh = ChshConfig(
                angles1=(self._float(section, "theta1", default=default.angles1[0]),
                         self._float(section, "phi1", default=default.angles1[1])),
                angles2=(self._float(section, "theta2", default=default.angles2[0]),
                         self._float(section, "phi2", default=default.angles2[1])),
                n1=self._vector(section, "n1", default=list(default.n1)),
                n2=self._vector(section, "n2", default=list(default.n2)),
            )
        except CplabError as e:
            raise ConfigError(str(e), section) from e
        if self._raw(section, "analytic") is not None:
            self.analytic_case = self._choice(section, "analytic", CASES, "none")

    def _load_tomography(self):
        section = "tomography"
        self.tomography_mode = self._choice(section, "mode", TOMOGRAPHY_MODES, "exact")
        self.tomography_shots = self._int(section, "shots")
        if self.tomography_mode == "shots" and (self.tomography_shots is None or self.tomography_shots <= 0):
            raise ConfigError("Shot mode needs a positive shot count", section, "shots")
        self.tomography_time = self._float(section, "time", default=0.0)
        self.tomography_seed = self._int(section, "seed", default=0)

    def _load_oracle(self):
        section = "oracle"
        self.oracle_trajectories = self._int(section, "trajectories", default=self.oracle_trajectories)
        self.oracle_seed = self._int(section, "seed", default=0)
        self.oracle_step = self._float(section, "step")
        self.oracle_threads = self._int(section, "threads")

    def _load_output(self):
        section = "output"
        self.out = self._raw(section, "path")
        self.format = self._choice(section, "format", OUTPUT_FORMATS, "csv")
        self.dump_trajectories = self._raw(section, "dump_trajectories")

    def _apply_overrides(self, overrides: Overrides):
        if overrides.out is not None:
            self.out = overrides.out
        if overrides.format is not None:
            self.format = overrides.format
        if overrides.seed is not None:
            self.oracle_seed = overrides.seed
            self.tomography_seed = overrides.seed
        if overrides.horizon is not None:
            self.horizon = overrides.horizon
        if overrides.steps is not None:
            self.steps = overrides.steps
        if overrides.no_lamb_shift:
            self.include_lamb_shift = False
        if overrides.dump_trajectories is not None:
            self.dump_trajectories = overrides.dump_trajectories

    def _validate(self):
        if self.horizon <= 0:
            raise ConfigError(f"Horizon must be positive, got {self.horizon}", "time", "horizon")
        if self.steps is None or self.steps < 2:
            raise ConfigError(f"Need at least two time steps, got {self.steps}", "time", "steps")
        if self.oracle_trajectories < 2:
            raise ConfigError("Oracle needs at least two trajectories", "oracle", "trajectories")
        if self.oracle_step is not None and self.oracle_step <= 0:
            raise ConfigError("RK4 step must be positive", "oracle", "step")
        for path in (self.out, self.dump_trajectories):
            if path and path != "-":
                directory = os.path.dirname(os.path.abspath(path))
                if os.path.isdir(directory) and not os.access(directory, os.W_OK):
                    raise ConfigError(f"Output directory is not writable: {directory}", "output", "path")

    def read_string(self, text: str, overrides: Optional[Overrides] = None) -> "RunConfig":
        try:
            self._parser.read_string(text, source=self.path)
        except configparser.MissingSectionHeaderError as e:
            raise ConfigError("Line is outside any [section]", line=e.lineno) from e
        except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as e:
            raise ConfigError("Duplicate section or key", getattr(e, "section", None),
                              getattr(e, "option", None), e.lineno) from e
        except configparser.ParsingError as e:
            line = e.errors[0][0] if e.errors else None
            raise ConfigError("Malformed line (expected 'key = value')", line=line) from e
        return self._load(overrides or Overrides())

    def load(self, overrides: Optional[Overrides] = None) -> "RunConfig":
        logger.info(f"Loading run configuration from {self.path}")
        try:
            with open(self.path, "r") as f:
                text = f.read()
        except FileNotFoundError:
            raise ConfigError(f"Config file not found: {self.path}") from None
        except OSError as e:
            raise ConfigError(f"Could not read config file {self.path}: {e}") from e
        return self.read_string(text, overrides)

    def _load(self, overrides: Overrides) -> "RunConfig":
        self._load_system()
        self._load_noise()
        self._load_generator()
        self._load_time()
        self._load_evolve()
        self._load_beam()
        self._load_chsh()
        self._load_tomography()
        self._load_oracle()
        self._load_output()
        self._apply_overrides(overrides)
        self._validate()
        logger.info("Run configuration loaded.")
        return self

    # --- Derived objects ---
    def generator_params(self) -> GeneratorParams:
        """Direct [generator] values when given, otherwise the Markov limit of the noise model."""
        if self.direct_params is not None:
            return self.direct_params if self.include_lamb_shift else self.direct_params.without_lamb_shift()
        return params_from_matrices(markov_matrices(self.noise, self.omega0), self.include_lamb_shift)

    def summary(self) -> Dict[str, Any]:
        return {
            "config": self.path,
            "noise_variant": self.noise_variant,
            "omega0": self.omega0,
            "include_lamb_shift": self.include_lamb_shift,
            "horizon": self.horizon,
            "steps": self.steps,
        }


def load_run_config(path: Optional[str] = None, overrides: Optional[Overrides] = None) -> RunConfig:
    return RunConfig(path or CPLAB_CONFIG).load(overrides)
