"""Figure generation for dualspin CSV telemetry."""
from .csvio import CsvFormatError, TelemetryFile, read_telemetry
from .plots import PlotSpec, plot_sweep_summary, plot_timeseries

__version__ = "0.1.0"
