import numpy as np
import pytest

HEADER = ("t,R_X1,R_Y1,R_Z1,V_X1,V_Y1,V_Z1,R,V_theta,n,"
          "p,q,r,phi_s,theta_s,psi_s,delta_n,delta_e,g_mu")


def make_trajectory_csv(path, n_rows=200, period=7225.67, amp=1.0,
                        with_period=True):
    """Minimal schema-valid trajectory file with a sine in theta_s."""
    lines = ["# dualspin-csv v1",
             "# units: km, km/s, rad/s; Euler columns in degrees"]
    if with_period:
        lines.append(f"# summary: orbital_period_s={period}")
    lines.append(HEADER)
    t = np.linspace(0.0, period, n_rows)
    theta = amp * np.sin(2 * np.pi * t / period)
    for k in range(n_rows):
        row = [t[k]] + [0.0] * 12 + [0.1 * k, theta[k], -0.2] + [1e-5, 0.0, 2.2e-6]
        lines.append(",".join(format(v, ".17g") for v in row))
    path.write_text("\n".join(lines) + "\n")
    return path


def make_sweep_csv(path, rows=None):
    header = ("e,i_deg,peak_phi_s_deg,peak_theta_s_deg,peak_psi_s_deg,"
              "period_estimate_s,settling_time_s,diverges,error")
    if rows is None:
        rows = ["0,0,0.001,18.0,0.0001,5025,,false,",
                "0,30,0.001,18.0,0.0001,5024,,false,",
                "0,60,0.001,18.0,0.0001,5021,,false,",
                "0.2,0,0.004,88.8,0.003,5776,,false,",
                "0.2,30,0.004,88.8,0.003,5777,,false,",
                "0.2,60,0.004,88.8,0.003,5779,,true,"]
    path.write_text("\n".join(["# dualspin-csv v1", header] + rows) + "\n")
    return path


@pytest.fixture
def trajectory_csv(tmp_path):
    return make_trajectory_csv(tmp_path / "run.csv")


@pytest.fixture
def sweep_csv(tmp_path):
    return make_sweep_csv(tmp_path / "sweep.csv")
