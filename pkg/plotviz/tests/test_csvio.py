"""Telemetry CSV parsing and schema enforcement."""
import numpy as np
import pytest

from plotviz.csvio import CsvFormatError, read_telemetry

from conftest import make_sweep_csv, make_trajectory_csv


class TestReadTelemetry:
    def test_columns_and_meta(self, trajectory_csv):
        tf = read_telemetry(trajectory_csv)
        assert tf.meta["orbital_period_s"] == "7225.67"
        assert len(tf.column("t")) == 200
        assert tf.column("theta_s").max() == pytest.approx(1.0, abs=1e-3)
        assert tf.label == "run"

    def test_rejects_wrong_schema_line(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("t,x\n0,1\n")
        with pytest.raises(CsvFormatError, match="dualspin CSV"):
            read_telemetry(bad)

    def test_rejects_missing_file(self, tmp_path):
        with pytest.raises(CsvFormatError, match="no such file"):
            read_telemetry(tmp_path / "nope.csv")

    def test_rejects_header_only(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("# dualspin-csv v1\nt,x\n")
        with pytest.raises(CsvFormatError, match="no data rows"):
            read_telemetry(empty)

    def test_rejects_ragged_rows(self, tmp_path):
        ragged = tmp_path / "ragged.csv"
        ragged.write_text("# dualspin-csv v1\nt,x\n0,1\n0,1,2\n")
        with pytest.raises(CsvFormatError, match="ragged"):
            read_telemetry(ragged)

    def test_missing_column_named_in_error(self, trajectory_csv):
        tf = read_telemetry(trajectory_csv)
        with pytest.raises(CsvFormatError, match="'nonesuch'"):
            tf.column("nonesuch")

    def test_period_requires_summary_entry(self, tmp_path):
        tf = read_telemetry(make_trajectory_csv(tmp_path / "np.csv",
                                                with_period=False))
        with pytest.raises(CsvFormatError, match="orbital_period_s"):
            tf.period_s()

    def test_boolean_and_empty_cells(self, sweep_csv):
        tf = read_telemetry(sweep_csv)
        diverges = tf.column("diverges")
        assert diverges.tolist() == [0, 0, 0, 0, 0, 1]
        assert np.isnan(tf.column("settling_time_s")).all()

    def test_text_column_kept_as_strings(self, tmp_path):
        path = make_sweep_csv(tmp_path / "s.csv",
                              rows=["0,0,,,,,,false,orbit decayed"])
        tf = read_telemetry(path)
        assert tf.column("error").dtype == object
