"""Loading series files and run configuration.

Two series formats are supported: plain (one decimal number per line) and
RFC-4180-style CSV with the column chosen by name or 0-based index. Run
configuration is a flat ``key = value`` text file whose grammar is documented
in docs/formats.md; command-line flags override file values.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .core import MiningParams, TimeSeries
from .errors import ConfigError, DataError
from .miner import ALGORITHMS

FORMATS = ("plain", "csv")


@dataclass(frozen=True)
class DatasetSpec:
    """Where and how to read one series."""

    path: Path
    format: str = ""  # "plain", "csv", or "" to infer from the suffix
    column: int | str | None = None  # csv only: column name or 0-based index
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "path", Path(self.path))
        if self.format and self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}; expected one of {FORMATS}")

    def resolved_format(self) -> str:
        if self.format:
            return self.format
        return "csv" if self.path.suffix.lower() == ".csv" else "plain"


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved mining run."""

    dataset: DatasetSpec
    params: MiningParams
    algorithm: str = "aop"
    output: Path | None = None
    emit_occurrences: bool | None = None  # None applies the automatic size cutoff
    emit_stats: bool = True


def load_series(spec: DatasetSpec) -> TimeSeries:
    """Read one numeric series from disk, preserving sample order."""
    path = spec.path
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    if spec.resolved_format() == "plain":
        values = _parse_plain(text, path)
    else:
        values = _parse_csv(text, path, spec.column)
    if not values:
        raise DataError(f"{path}: empty series")
    return TimeSeries(tuple(values), name=spec.name or path.stem)


def _parse_plain(text: str, path: Path) -> list[float]:
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        token = raw.strip()
        if token:
            values.append(_parse_sample(token, path, lineno))
    return values


def _parse_csv(text: str, path: Path, column: int | str | None) -> list[float]:
    reader = csv.reader(io.StringIO(text, newline=""))
    rows = []
    for row in reader:
        if row and any(cell.strip() for cell in row):
            rows.append((reader.line_num, row))
    if not rows:
        return []

    col = 0 if column is None else column
    if isinstance(col, str):
        header = rows[0][1]
        if col not in header:
            raise DataError(f"{path}: column {col!r} not found in header {header}")
        index = header.index(col)
        rows = rows[1:]
    else:
        index = col
        first_line, first_row = rows[0]
        if index >= len(first_row):
            raise DataError(
                f"{path}:{first_line}: row has {len(first_row)} columns, need index {index}"
            )
        # a first row whose chosen cell is not numeric is taken as a header
        try:
            float(first_row[index])
        except ValueError:
            rows = rows[1:]

    values = []
    for lineno, row in rows:
        if index >= len(row):
            raise DataError(f"{path}:{lineno}: row has {len(row)} columns, need column {col!r}")
        values.append(_parse_sample(row[index].strip(), path, lineno))
    return values


def _parse_sample(token: str, path: Path, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise DataError(f"{path}:{lineno}: unparseable value {token!r}") from None
    if not math.isfinite(value):
        raise DataError(f"{path}:{lineno}: non-finite sample {token!r}")
    return value


def _convert_bool(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(f"expected a boolean, got {value!r}")


def _convert_int(value: str) -> int:
    return int(value, 10)


def _convert_column(value: str) -> int | str:
    return int(value, 10) if value.lstrip("-").isdigit() else value


def _convert_format(value: str) -> str:
    if value not in FORMATS:
        raise ValueError(f"expected one of {FORMATS}, got {value!r}")
    return value


def _convert_algorithm(value: str) -> str:
    if value not in ALGORITHMS:
        raise ValueError(f"expected one of {ALGORITHMS}, got {value!r}")
    return value


_CONFIG_KEYS: dict[str, Callable[[str], Any]] = {
    "input": str,
    "format": _convert_format,
    "column": _convert_column,
    "name": str,
    "delta": _convert_int,
    "gamma": _convert_int,
    "minsup": _convert_int,
    "max_length": _convert_int,
    "algorithm": _convert_algorithm,
    "output": str,
    "occurrences": _convert_bool,
    "stats": _convert_bool,
}


def parse_config(path: str | Path) -> dict[str, Any]:
    """Parse the flat ``key = value`` run-configuration format.

    One assignment per line; blank lines and full-line ``#`` comments are
    ignored; keys may not repeat.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    values: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rhs = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](rhs.strip())
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from None
    return values


def build_run_config(values: dict[str, Any]) -> RunConfig:
    """Materialize a RunConfig from merged config-file and CLI values.

    ``input`` and ``minsup`` are required; delta and gamma default to 0, the
    exact-matching specialization.
    """
    for key in ("input", "minsup"):
        if values.get(key) is None:
            raise ConfigError(f"missing required key: {key}")
    try:
        params = MiningParams(
            delta=values["delta"] if values.get("delta") is not None else 0,
            gamma=values["gamma"] if values.get("gamma") is not None else 0,
            minsup=values["minsup"],
            max_len=values.get("max_length"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    algorithm = values.get("algorithm") or "aop"
    if algorithm not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    dataset = DatasetSpec(
        path=Path(values["input"]),
        format=values.get("format") or "",
        column=values.get("column"),
        name=values.get("name"),
    )
    output = values.get("output")
    return RunConfig(
        dataset=dataset,
        params=params,
        algorithm=algorithm,
        output=Path(output) if output is not None else None,
        emit_occurrences=values.get("occurrences"),
        emit_stats=values.get("stats", True),
    )


def load_config(path: str | Path) -> RunConfig:
    """Parse a configuration file straight into a RunConfig."""
    return build_run_config(parse_config(path))
