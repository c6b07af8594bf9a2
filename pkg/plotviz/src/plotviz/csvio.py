"""Schema-checked reader for dualspin CSV telemetry files."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SCHEMA_LINE = "# dualspin-csv v1"
SUMMARY_PREFIX = "# summary: "


class CsvFormatError(Exception):
    pass


@dataclass(frozen=True)
class TelemetryFile:
    """One parsed CSV: column arrays plus the summary metadata block."""
    path: Path
    columns: dict[str, np.ndarray]
    meta: dict[str, str]

    @property
    def label(self) -> str:
        return self.path.stem

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise CsvFormatError(
                f"{self.path}: column {name!r} not in header "
                f"({', '.join(self.columns)})")
        return self.columns[name]

    def period_s(self) -> float:
        if "orbital_period_s" not in self.meta:
            raise CsvFormatError(
                f"{self.path}: no orbital_period_s in the summary block")
        return float(self.meta["orbital_period_s"])


def read_telemetry(path: str | Path) -> TelemetryFile:
    """Parse one CSV, enforcing the schema line and a non-empty body.

    Raises:
        CsvFormatError: wrong/missing schema line, no header, no data rows,
            or non-numeric cells.
    """
    path = Path(path)
    if not path.is_file():
        raise CsvFormatError(f"no such file: {path}")
    lines = path.read_text().splitlines()
    if not lines or lines[0] != SCHEMA_LINE:
        raise CsvFormatError(
            f"{path}: not a dualspin CSV (expected leading {SCHEMA_LINE!r})")

    meta: dict[str, str] = {}
    header: list[str] | None = None
    rows: list[list[str]] = []
    for line in lines[1:]:
        if line.startswith(SUMMARY_PREFIX):
            key, _, value = line[len(SUMMARY_PREFIX):].partition("=")
            meta[key] = value
        elif line.startswith("#") or not line.strip():
            continue
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))

    if header is None:
        raise CsvFormatError(f"{path}: no header line")
    if not rows:
        raise CsvFormatError(f"{path}: no data rows")
    if any(len(row) != len(header) for row in rows):
        raise CsvFormatError(f"{path}: ragged rows vs header")

    def to_numeric(cell: str) -> float:
        if cell == "":
            return math.nan
        if cell == "true":
            return 1.0
        if cell == "false":
            return 0.0
        return float(cell)

    columns: dict[str, np.ndarray] = {}
    for k, name in enumerate(header):
        cells = [row[k] for row in rows]
        try:
            columns[name] = np.array([to_numeric(c) for c in cells])
        except ValueError:
            # Free-text column (e.g. sweep error messages); kept as strings,
            # rejected with a clear message if someone tries to plot it.
            columns[name] = np.array(cells, dtype=object)
    return TelemetryFile(path=path, columns=columns, meta=meta)
