"""Figure builders for dualspin telemetry: time series and sweep summaries.

Plot generation never touches the input CSVs and is a pure function of the
inputs and the PlotSpec: fixed figure geometry, axis ranges derived from
the data (or pinned through the PlotSpec), deterministic colors.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .csvio import CsvFormatError, TelemetryFile, read_telemetry

FIGSIZE = (9.0, 5.0)
DPI = 120


@dataclass(frozen=True)
class PlotSpec:
    """What to plot and where to write it.

    Attributes:
        csv_paths: Input telemetry files (same schema version).
        columns: Column names to plot; for sweep charts the single metric.
        out_path: Output image; format chosen by extension (.png or .svg).
        labels: Overlay labels, one per input file; file stems by default.
        per_orbit: Time axis in orbit fractions, using the orbital period
            stamped in each file's summary block.
        x_column: Sweep chart abscissa, "e" or "i_deg".
        ylim: Optional pinned y-range.
    """
    csv_paths: tuple[str, ...]
    columns: tuple[str, ...]
    out_path: str
    labels: tuple[str, ...] = ()
    per_orbit: bool = False
    x_column: str = "e"
    ylim: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.csv_paths:
            raise ValueError("at least one input CSV is required")
        if not self.columns:
            raise ValueError("at least one column name is required")
        if self.labels and len(self.labels) != len(self.csv_paths):
            raise ValueError("need exactly one label per input CSV")
        suffix = Path(self.out_path).suffix.lower()
        if suffix not in (".png", ".svg"):
            raise ValueError(f"unsupported image format {suffix!r}")


def _load_all(spec: PlotSpec) -> list[TelemetryFile]:
    files = [read_telemetry(p) for p in spec.csv_paths]
    for tf in files:
        for col in spec.columns:
            tf.column(col)  # fails early, naming the missing column
    return files


def _numeric(tf: TelemetryFile, name: str) -> np.ndarray:
    values = tf.column(name)
    if values.dtype == object:
        raise CsvFormatError(
            f"{tf.path}: column {name!r} is not numeric")
    return values


def plot_timeseries(spec: PlotSpec) -> Path:
    """One axes, one curve per (file, column) pair, legend from labels.

    Returns the written image path.
    """
    files = _load_all(spec)
    labels = spec.labels or tuple(tf.label for tf in files)

    fig, ax = plt.subplots(figsize=FIGSIZE)
    for tf, label in zip(files, labels):
        t = _numeric(tf, "t")
        if spec.per_orbit:
            t = t / tf.period_s()
        for col in spec.columns:
            series_label = (f"{label}: {col}" if len(spec.columns) > 1
                            else label)
            ax.plot(t, _numeric(tf, col), label=series_label, linewidth=1.0)
    ax.set_xlabel("orbits" if spec.per_orbit else "time (s)")
    ax.set_ylabel(", ".join(spec.columns))
    ax.grid(True, alpha=0.3)
    ax.legend()
    if spec.ylim is not None:
        ax.set_ylim(*spec.ylim)
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=DPI)
    plt.close(fig)
    return out


def plot_sweep_summary(spec: PlotSpec) -> Path:
    """Chart one sweep metric against e or i_deg.

    Cells sharing the other grid variable become one line; a single cell
    degenerates to a single marker.
    """
    if len(spec.columns) != 1:
        raise ValueError("sweep charts take exactly one metric column")
    metric = spec.columns[0]
    files = _load_all(spec)

    fig, ax = plt.subplots(figsize=FIGSIZE)
    other = "i_deg" if spec.x_column == "e" else "e"
    for tf in files:
        x = _numeric(tf, spec.x_column)
        y = _numeric(tf, metric)
        groups = _numeric(tf, other) if other in tf.columns else np.zeros_like(x)
        for value in np.unique(groups):
            mask = groups == value
            label = f"{tf.label} ({other}={value:g})"
            ax.plot(x[mask], y[mask], marker="o", label=label)
    ax.set_xlabel(spec.x_column)
    ax.set_ylabel(metric)
    ax.grid(True, alpha=0.3)
    ax.legend()
    if spec.ylim is not None:
        ax.set_ylim(*spec.ylim)
    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=DPI)
    plt.close(fig)
    return out
