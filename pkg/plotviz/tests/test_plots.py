"""Figure builders: outputs, overlays, error paths, determinism."""
import pytest

from plotviz.csvio import CsvFormatError
from plotviz.plots import PlotSpec, plot_sweep_summary, plot_timeseries

from conftest import make_trajectory_csv


def spec_for(paths, cols, out, **kwargs):
    return PlotSpec(csv_paths=tuple(str(p) for p in paths),
                    columns=tuple(cols), out_path=str(out), **kwargs)


class TestPlotTimeseries:
    def test_single_curve_png(self, trajectory_csv, tmp_path):
        out = plot_timeseries(spec_for([trajectory_csv], ["phi_s"],
                                       tmp_path / "fig.png"))
        assert out.is_file() and out.stat().st_size > 1000

    def test_two_file_overlay(self, tmp_path):
        a = make_trajectory_csv(tmp_path / "e0.csv", amp=0.5)
        b = make_trajectory_csv(tmp_path / "e02.csv", amp=2.0)
        out = plot_timeseries(spec_for([a, b], ["theta_s"],
                                       tmp_path / "overlay.png",
                                       labels=("e=0", "e=0.2")))
        assert out.is_file() and out.stat().st_size > 1000

    def test_per_orbit_axis_uses_stamped_period(self, trajectory_csv, tmp_path):
        out = plot_timeseries(spec_for([trajectory_csv], ["theta_s"],
                                       tmp_path / "fig.png", per_orbit=True))
        assert out.is_file()

    def test_per_orbit_without_period_fails(self, tmp_path):
        path = make_trajectory_csv(tmp_path / "np.csv", with_period=False)
        with pytest.raises(CsvFormatError, match="orbital_period_s"):
            plot_timeseries(spec_for([path], ["theta_s"],
                                     tmp_path / "fig.png", per_orbit=True))

    def test_missing_column_aborts_with_name(self, trajectory_csv, tmp_path):
        with pytest.raises(CsvFormatError, match="'zeta'"):
            plot_timeseries(spec_for([trajectory_csv], ["zeta"],
                                     tmp_path / "fig.png"))

    def test_empty_data_rows_no_image(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("# dualspin-csv v1\nt,theta_s\n")
        out = tmp_path / "fig.png"
        with pytest.raises(CsvFormatError):
            plot_timeseries(spec_for([empty], ["theta_s"], out))
        assert not out.exists()

    def test_svg_output(self, trajectory_csv, tmp_path):
        out = plot_timeseries(spec_for([trajectory_csv], ["theta_s"],
                                       tmp_path / "fig.svg"))
        assert out.read_text().lstrip().startswith("<?xml")

    def test_unsupported_format_rejected(self, trajectory_csv, tmp_path):
        with pytest.raises(ValueError, match="format"):
            spec_for([trajectory_csv], ["theta_s"], tmp_path / "fig.pdf")

    def test_deterministic_output_bytes(self, trajectory_csv, tmp_path):
        out1 = plot_timeseries(spec_for([trajectory_csv], ["theta_s"],
                                        tmp_path / "a.png"))
        out2 = plot_timeseries(spec_for([trajectory_csv], ["theta_s"],
                                        tmp_path / "b.png"))
        assert out1.read_bytes() == out2.read_bytes()

    def test_label_count_mismatch_rejected(self, trajectory_csv, tmp_path):
        with pytest.raises(ValueError, match="label"):
            spec_for([trajectory_csv], ["theta_s"], tmp_path / "f.png",
                     labels=("a", "b"))


class TestPlotSweepSummary:
    def test_six_cell_chart(self, sweep_csv, tmp_path):
        out = plot_sweep_summary(spec_for([sweep_csv], ["peak_psi_s_deg"],
                                          tmp_path / "sweep.png"))
        assert out.is_file() and out.stat().st_size > 1000

    def test_single_row_single_point(self, tmp_path):
        from conftest import make_sweep_csv
        path = make_sweep_csv(tmp_path / "one.csv",
                              rows=["0.2,30,0.004,88.8,0.003,5777,,false,"])
        out = plot_sweep_summary(spec_for([path], ["peak_theta_s_deg"],
                                          tmp_path / "one.png"))
        assert out.is_file()

    def test_unknown_metric_rejected(self, sweep_csv, tmp_path):
        with pytest.raises(CsvFormatError, match="'no_such_metric'"):
            plot_sweep_summary(spec_for([sweep_csv], ["no_such_metric"],
                                        tmp_path / "f.png"))

    def test_text_metric_rejected(self, sweep_csv, tmp_path):
        from conftest import make_sweep_csv
        path = make_sweep_csv(tmp_path / "err.csv",
                              rows=["0,0,,,,,,false,boom"])
        with pytest.raises(CsvFormatError, match="not numeric"):
            plot_sweep_summary(spec_for([path], ["error"],
                                        tmp_path / "f.png"))

    def test_metric_vs_inclination(self, sweep_csv, tmp_path):
        out = plot_sweep_summary(spec_for([sweep_csv], ["peak_phi_s_deg"],
                                          tmp_path / "byi.png",
                                          x_column="i_deg"))
        assert out.is_file()

    def test_two_metrics_rejected(self, sweep_csv, tmp_path):
        with pytest.raises(ValueError, match="one metric"):
            plot_sweep_summary(spec_for([sweep_csv],
                                        ["peak_phi_s_deg", "peak_psi_s_deg"],
                                        tmp_path / "f.png"))
