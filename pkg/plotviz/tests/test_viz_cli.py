"""plotviz CLI argument handling and exit codes."""
from plotviz.cli import main

from conftest import make_trajectory_csv


class TestTimeseriesCommand:
    def test_overlay(self, tmp_path):
        a = make_trajectory_csv(tmp_path / "a.csv", amp=0.5)
        b = make_trajectory_csv(tmp_path / "b.csv", amp=1.5)
        out = tmp_path / "fig.png"
        assert main(["timeseries", "--csv", str(a), str(b),
                     "--cols", "theta_s", "--out", str(out),
                     "--labels", "e=0", "e=0.2"]) == 0
        assert out.is_file()

    def test_per_orbit_flag(self, trajectory_csv, tmp_path):
        out = tmp_path / "fig.png"
        assert main(["timeseries", "--csv", str(trajectory_csv),
                     "--cols", "theta_s", "delta_n", "--out", str(out),
                     "--per-orbit"]) == 0
        assert out.is_file()

    def test_missing_column_exits_2(self, trajectory_csv, tmp_path, capsys):
        assert main(["timeseries", "--csv", str(trajectory_csv),
                     "--cols", "zeta", "--out", str(tmp_path / "f.png")]) == 2
        assert "zeta" in capsys.readouterr().err

    def test_bad_schema_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("t,x\n1,2\n")
        assert main(["timeseries", "--csv", str(bad), "--cols", "x",
                     "--out", str(tmp_path / "f.png")]) == 2

    def test_ylim_option(self, trajectory_csv, tmp_path):
        assert main(["timeseries", "--csv", str(trajectory_csv),
                     "--cols", "theta_s", "--out", str(tmp_path / "f.png"),
                     "--ylim", "-2", "2"]) == 0


class TestSweepCommand:
    def test_metric_chart(self, sweep_csv, tmp_path):
        out = tmp_path / "sweep.svg"
        assert main(["sweep", "--csv", str(sweep_csv),
                     "--cols", "peak_psi_s_deg", "--out", str(out),
                     "--x", "i_deg"]) == 0
        assert out.is_file()

    def test_unknown_metric_exits_2(self, sweep_csv, tmp_path, capsys):
        assert main(["sweep", "--csv", str(sweep_csv),
                     "--cols", "nope", "--out", str(tmp_path / "f.png")]) == 2
        assert "nope" in capsys.readouterr().err
