import logging
from typing import Any, Optional

logger = logging.getLogger(__name__)


class CplabError(Exception):
    """Base class for every error raised by the cplab package."""


class ValidationError(CplabError, ValueError):
    """An input violates a precondition (shape, hermiticity, normalization, grid)."""


class StepSizeError(ValidationError):
    """The RK4 step is too coarse for the field it has to integrate."""


class UnsupportedVariantError(CplabError, TypeError):
    """A noise-model accessor was called on the wrong variant."""


class NumericalError(CplabError):
    """A numerical routine did not reach its tolerance."""

    def __init__(self, message: str, achieved: Optional[float] = None):
        super().__init__(message)
        self.achieved = achieved


class NoLindbladFormError(CplabError):
    """L_D has a negative eigenvalue, so no Lindblad operators exist."""

    def __init__(self, message: str, min_eigenvalue: Optional[float] = None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class ConsistencyError(CplabError):
    """Two independent computations disagree beyond their tolerance band."""


class SamplingError(CplabError):
    """Shot sampling was requested on a distribution with negative weights."""


class MissingSettingError(CplabError, KeyError):
    """A tomography record lacks an expectation needed for reconstruction."""

    def __init__(self, theta: float, phi: float, axis: str, j: Optional[int] = None):
        self.theta = theta
        self.phi = phi
        self.axis = axis
        self.j = j
        detail = f"theta={theta:.6g}, phi={phi:.6g}, n={axis}"
        if j is not None:
            detail += f", j={j}"
        super().__init__(f"Tomography record is missing setting ({detail})")

    def __str__(self) -> str:
        # KeyError would otherwise repr() the message
        return self.args[0]


class ConfigError(CplabError):
    """The run configuration could not be parsed or validated."""

    def __init__(self, message: str, section: Optional[str] = None, field: Optional[str] = None,
                 line: Optional[int] = None):
        location = []
        if section:
            location.append(f"section [{section}]")
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}")
        full = f"{message} ({', '.join(location)})" if location else message
        super().__init__(full)
        self.section = section
        self.field = field
        self.line = line


def log_error(message: str, exc_info: bool = False, **context: Any):
    """Logs an error message, appending any context pairs (command, config path, ...)."""
    log_message = f"ERROR: {message}"
    for key, value in context.items():
        if value is not None:
            log_message += f" | {key}: {value}"
    logger.error(log_message, exc_info=exc_info)
