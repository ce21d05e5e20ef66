"""CSV/JSON emission for command results."""

import csv
import json
import logging
import os
import sys
from contextlib import contextmanager
from typing import Any, Iterable, Iterator, Optional, Sequence, TextIO

import numpy as np

from src.config.config import CSV_PRECISION

logger = logging.getLogger(__name__)


def format_number(value: Any) -> str:
    """Full-precision text for numbers; other values pass through str()."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{CSV_PRECISION}g}"
    return str(value)


def to_jsonable(value: Any) -> Any:
    """Converts numpy values and complex numbers into JSON-friendly builtins."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Yields a text stream for `path`, or stdout when path is None or '-'."""
    if path is None or path == "-":
        yield sys.stdout
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", newline="") as handle:
        yield handle
    logger.info(f"Wrote {path}")


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], path: Optional[str] = None):
    with open_output(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_number(v) for v in row])


def write_json(payload: Any, path: Optional[str] = None):
    with open_output(path) as handle:
        json.dump(to_jsonable(payload), handle, indent=2, sort_keys=False)
        handle.write("\n")
