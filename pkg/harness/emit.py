"""Result emission: CSV tables and the JSON envelope."""

import csv
import io
import json
import math
from enum import Enum
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

import click
import numpy as np

from env import settings
from utils.errors import ArtifactIOError
from utils.logger import Logger
from utils.types import OutputFormat, Row

PACKAGE_NAME = "pam-subgraphs"


def package_version() -> str:
    try:
        return version(PACKAGE_NAME)
    except PackageNotFoundError:
        return "0.0.0+local"


def format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        return str(value)
    if settings.PAM_FLOAT_FORMAT == "fixed":
        return f"{value:.12f}"
    return repr(value)


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_cell(item) for item in value)
    return str(value)


def to_jsonable(value: Any) -> Any:
    """Plain JSON types only; non-finite floats become null."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def render_csv(records: list[Row], columns: list[str] | None = None) -> str:
    """Header row plus one line per record; column order is the first record's key order."""
    if columns is None:
        columns = list(records[0]) if records else []
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({key: _csv_cell(record.get(key)) for key in columns})
    return buffer.getvalue()


def render_json(config: dict[str, Any], results: Any) -> str:
    envelope = {
        "config": to_jsonable(config),
        "results": to_jsonable(results),
        "version": package_version(),
    }
    return json.dumps(envelope, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_text(text: str, out: str | Path | None) -> None:
    """Write to ``out`` or, when it is None, to stdout."""
    if out is None:
        click.echo(text, nl=False)
        return
    target = Path(out)
    try:
        target.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write '{target}': {exc}") from exc
    Logger.stage("emit", "written", path=str(target), bytes=len(text.encode("utf-8")))


def emit(
    results: Any,
    output_format: OutputFormat,
    config: dict[str, Any],
    out: str | Path | None = None,
    columns: list[str] | None = None,
) -> None:
    """Emit ``results`` as CSV rows or inside the JSON envelope.

    CSV needs a list of flat records; a single record is written as one row.
    """
    if output_format is OutputFormat.JSON:
        write_text(render_json(config, results), out)
        return
    records = results if isinstance(results, list) else [results]
    write_text(render_csv(records, columns), out)
