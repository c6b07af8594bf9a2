"""Batch command-line front end: scenario files in, CSV telemetry out.

Subcommands: orbit, simulate, eig, sweep, validate. Scenario files are flat
TOML key-value text, one scenario per file; every key has a default, so all
subcommands also run without a config. Angles are degrees in config files
and in the Euler CSV columns, radians/s in the rate columns. Numbers are
written with 17 significant digits (round-trip exact for 64-bit floats).

Exit codes: 0 success, 2 configuration error, 3 runtime abort (orbit decay),
4 validation failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from dataclasses import fields
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import validation
from .attitude import (DirectMatrices, SatelliteParams, SYNTHETIC_PARAMS,
                       build_state_space, derive_gg_ratios, direct_state_space)
from .engine import (DEFAULT_ATTITUDE_DT_S, DEFAULT_ORBIT_DT_S, ImpactError,
                     InputSignal, Scenario, divergence_detector,
                     dominant_period, eigen_analysis, integrate_orbit,
                     run_coupled, settling_time, sweep)
from .gravity import gg_coefficients, gmu_coefficient
from .orbit import EarthModel, KeplerianElements, state_from_elements, orbital_rate

SCHEMA_LINE = "# dualspin-csv v1"

ORBIT_COLUMNS = ("t", "R_X1", "R_Y1", "R_Z1", "V_X1", "V_Y1", "V_Z1",
                 "R", "V_theta", "n")
TRAJECTORY_COLUMNS = ORBIT_COLUMNS + (
    "p", "q", "r", "phi_s", "theta_s", "psi_s", "delta_n", "delta_e", "g_mu")
SWEEP_COLUMNS = ("e", "i_deg", "peak_phi_s_deg", "peak_theta_s_deg",
                 "peak_psi_s_deg", "period_estimate_s", "settling_time_s",
                 "diverges", "error")

_ELEMENT_KEYS = {"a_km", "e", "i_deg", "raan_deg", "argp_deg",
                 "true_anomaly_deg"}
_EARTH_KEYS = {"mu_km3_s2", "r_eq_km", "j2"}
_RUN_KEYS = {"mode", "duration_s", "orbits", "dt_s", "use_j2",
             "use_gravity_gradient"}
_SIGNAL_KEYS = {"impulse_start_s", "impulse_width_s", "impulse_volts",
                "segments"}
_DIRECT_KEYS = {"a13", "a21", "a22", "a23", "a31", "a32", "a33", "b21", "b31",
                "gg_ratio_roll", "gg_ratio_pitch", "gg_ratio_yaw",
                "rotor_transverse_ratio"}
_BUILDER_KEYS = {"i_x", "i_y", "i_z", "i_yz", "i_s", "i_t", "omega_r0",
                 "n_gear", "k_v", "r_dc", "c_visc"}
_SWEEP_KEYS = {"e_values", "i_values_deg"}
_ALL_KEYS = (_ELEMENT_KEYS | _EARTH_KEYS | _RUN_KEYS | _SIGNAL_KEYS
             | _DIRECT_KEYS | _BUILDER_KEYS | _SWEEP_KEYS)


class ConfigError(Exception):
    pass


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    file = Path(path)
    if not file.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = tomllib.loads(file.read_text())
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}")
    unknown = set(raw) - _ALL_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return raw


def build_scenario(cfg: dict, args: argparse.Namespace,
                   default_dt: float) -> Scenario:
    """Turn a raw config dict plus CLI overrides into a Scenario."""
    try:
        earth = EarthModel(mu=cfg.get("mu_km3_s2", 398600.4418),
                           r_eq=cfg.get("r_eq_km", 6378.137),
                           j2=cfg.get("j2", 1.08263e-3))
        elements = KeplerianElements.from_degrees(
            cfg.get("a_km", 8078.14), cfg.get("e", 0.0),
            cfg.get("i_deg", 0.0), cfg.get("raan_deg", 0.0),
            cfg.get("argp_deg", 0.0), cfg.get("true_anomaly_deg", 0.0))

        mode = args.mode or cfg.get("mode", "direct")
        dt = args.dt if args.dt is not None else cfg.get("dt_s", default_dt)
        if args.orbits is not None:
            duration = args.orbits * elements.period(earth)
        elif "orbits" in cfg:
            duration = cfg["orbits"] * elements.period(earth)
        else:
            duration = cfg.get("duration_s", elements.period(earth))

        if "segments" in cfg:
            signal = InputSignal(tuple(tuple(seg) for seg in cfg["segments"]))
        else:
            signal = InputSignal.impulse(
                start_s=cfg.get("impulse_start_s", 10.0),
                width_s=cfg.get("impulse_width_s", 1.0),
                volts=cfg.get("impulse_volts", 1.0))

        satellite = None
        matrices = None
        gg_ratios = None
        if mode == "builder":
            params = {f.name: cfg.get(f.name, getattr(SYNTHETIC_PARAMS, f.name))
                      for f in fields(SatelliteParams)}
            satellite = SatelliteParams(**params)
        else:
            defaults = DirectMatrices()
            matrices = DirectMatrices(**{
                k: cfg.get(k, getattr(defaults, k))
                for k in defaults.as_dict()})
            derived = derive_gg_ratios(
                matrices, i_t_over_i_y=cfg.get("rotor_transverse_ratio", 1.5))
            gg_ratios = (cfg.get("gg_ratio_roll", derived[0]),
                         cfg.get("gg_ratio_pitch", derived[1]),
                         cfg.get("gg_ratio_yaw", derived[2]))

        return Scenario(
            elements=elements, earth=earth, mode=mode, satellite=satellite,
            matrices=matrices, gg_ratios=gg_ratios, duration_s=duration,
            dt_s=dt, signal=signal,
            use_j2=not args.no_j2 and cfg.get("use_j2", True),
            use_gravity_gradient=(not args.no_gg
                                  and cfg.get("use_gravity_gradient", True)))
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def write_csv(path: Path, columns: tuple[str, ...], rows,
              meta: dict | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as fh:
        fh.write(SCHEMA_LINE + "\n")
        fh.write("# units: km, km/s, rad/s; Euler columns phi_s/theta_s/"
                 "psi_s in degrees\n")
        for key, value in (meta or {}).items():
            fh.write(f"# summary: {key}={_fmt(value)}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _orbit_rows(traj):
    for k in range(len(traj.t)):
        yield (traj.t[k], *traj.position[k], *traj.velocity[k],
               traj.radius[k], traj.v_theta[k], traj.n[k])


def _trajectory_rows(traj):
    for k in range(len(traj.t)):
        yield (traj.t[k], *traj.position[k], *traj.velocity[k],
               traj.radius[k], traj.v_theta[k], traj.n[k],
               traj.p[k], traj.q[k], traj.r[k],
               math.degrees(traj.phi_s[k]), math.degrees(traj.theta_s[k]),
               math.degrees(traj.psi_s[k]), traj.delta_n[k],
               traj.delta_e[k], traj.g_mu[k])


def cmd_orbit(args) -> int:
    cfg = load_config(args.config)
    scenario = build_scenario(cfg, args, default_dt=DEFAULT_ORBIT_DT_S)
    out = Path(args.out) / "orbit.csv"
    if scenario.duration_s == 0.0:
        write_csv(out, ORBIT_COLUMNS, [])
        print(f"wrote {out} (header only, zero duration)")
        return 0
    traj = integrate_orbit(scenario)
    write_csv(out, ORBIT_COLUMNS, _orbit_rows(traj),
              meta={"orbital_period_s": scenario.period_s()})
    print(f"wrote {out} ({len(traj.t)} rows)")
    return 0


def _run_metrics(traj) -> dict:
    scenario = traj.scenario
    period = scenario.period_s()
    span = traj.t[-1] - traj.t[0]
    metrics = {
        "orbital_period_s": period,
        "peak_phi_s_deg": math.degrees(np.max(np.abs(traj.phi_s))),
        "peak_theta_s_deg": math.degrees(np.max(np.abs(traj.theta_s))),
        "peak_psi_s_deg": math.degrees(np.max(np.abs(traj.psi_s))),
        "period_estimate_s": dominant_period(traj.t, traj.theta_s),
        "settling_time_s": (settling_time(traj.t, traj.phi_s, period / 8.0)
                            if span >= period / 8.0 else None),
        "small_angle_violations": int(np.count_nonzero(
            traj.small_angle_violation)),
    }
    n_orbits = int(math.floor(traj.t[-1] / period + 1e-3))
    metrics["diverges"] = (divergence_detector(traj).diverges
                           if n_orbits > 4 else None)
    return metrics


def cmd_simulate(args) -> int:
    cfg = load_config(args.config)
    scenario = build_scenario(cfg, args, default_dt=DEFAULT_ATTITUDE_DT_S)
    out_dir = Path(args.out)
    traj_path = out_dir / "trajectory.csv"
    if scenario.duration_s == 0.0:
        write_csv(traj_path, TRAJECTORY_COLUMNS, [])
        print(f"wrote {traj_path} (header only, zero duration)")
        return 0
    traj = run_coupled(scenario)
    meta = _run_metrics(traj)
    if scenario.mode == "direct":
        meta.update(scenario.matrices.as_dict())  # echo constants for audit
    write_csv(traj_path, TRAJECTORY_COLUMNS, _trajectory_rows(traj), meta=meta)
    write_csv(out_dir / "summary.csv", tuple(meta), [tuple(meta.values())])
    print(f"wrote {traj_path} ({len(traj.t)} rows)")
    for key, value in meta.items():
        print(f"  {key} = {_fmt(value)}")
    return 0


def cmd_eig(args) -> int:
    cfg = load_config(args.config)
    scenario = build_scenario(cfg, args, default_dt=DEFAULT_ATTITUDE_DT_S)
    elements = dataclasses.replace(scenario.elements,
                                   true_anomaly=math.radians(args.phase_deg))
    state0 = state_from_elements(scenario.elements, scenario.earth)
    n0, _ = orbital_rate(state0, scenario.elements)
    state = state_from_elements(elements, scenario.earth)
    _, delta_n = orbital_rate(state, elements, n0)
    earth = scenario.earth if scenario.use_j2 else EarthModel(
        mu=scenario.earth.mu, r_eq=scenario.earth.r_eq, j2=0.0)
    g_mu = gmu_coefficient(state.radius, state.position[2], earth)
    if scenario.mode == "builder":
        s = scenario.satellite
        gg = (gg_coefficients(g_mu, s.i_x, s.i_y, s.i_z, s.i_yz)
              if scenario.use_gravity_gradient else None)
        ss = build_state_space(s, gg, delta_n)
    else:
        shapes = scenario.gg_entry_shapes()
        ss = direct_state_space(scenario.matrices,
                                tuple(h * g_mu for h in shapes), delta_n)
    eigs = sorted(eigen_analysis(ss.a), key=lambda c: (c.real, c.imag))
    out = Path(args.out) / "eig.csv"
    write_csv(out, ("re", "im"), [(lam.real, lam.imag) for lam in eigs],
              meta={"phase_deg": args.phase_deg, "delta_n": delta_n,
                    "g_mu": g_mu})
    print(f"wrote {out}")
    for lam in eigs:
        print(f"  {lam.real:+.6e} {lam.imag:+.6e}j")
    return 0


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    template = build_scenario(cfg, args, default_dt=DEFAULT_ATTITUDE_DT_S)
    e_values = cfg.get("e_values", [0.0, 0.2])
    i_values_deg = cfg.get("i_values_deg", [0.0, 30.0, 60.0])
    rows = sweep(template, e_values, [math.radians(v) for v in i_values_deg],
                 jobs=args.jobs)
    grid = [(e, i) for e in e_values for i in i_values_deg]
    out = Path(args.out) / "sweep.csv"

    def to_row(cell, r):
        return (cell[0], cell[1],
                None if r.peak_phi_s is None else math.degrees(r.peak_phi_s),
                None if r.peak_theta_s is None else math.degrees(r.peak_theta_s),
                None if r.peak_psi_s is None else math.degrees(r.peak_psi_s),
                r.period_estimate_s, r.settling_time_s, r.diverges, r.error)

    write_csv(out, SWEEP_COLUMNS,
              (to_row(cell, r) for cell, r in zip(grid, rows)))
    print(f"wrote {out} ({len(rows)} rows)")
    return 0


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    earth = EarthModel(mu=cfg.get("mu_km3_s2", 398600.4418),
                       r_eq=cfg.get("r_eq_km", 6378.137),
                       j2=cfg.get("j2", 1.08263e-3))
    if args.only:
        wanted = {name.upper() for name in args.only}
        unknown = wanted - {f"AC-{k}" for k in range(1, 10)}
        if unknown:
            raise ConfigError(f"unknown criteria: {sorted(unknown)}")
        results = [getattr(validation, f"check_ac{name.split('-')[1]}")(earth)
                   for name in sorted(wanted, key=lambda s: int(s.split("-")[1]))]
    else:
        results = validation.run_all(earth)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} criteria failed")
        return 4
    print(f"all {len(results)} criteria passed")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dualspin",
        description="Dual-spin satellite dynamics batch simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="scenario file (flat TOML)")
        p.add_argument("--out", default="out", help="output directory")
        p.add_argument("--dt", type=float, help="integration step (s)")
        p.add_argument("--orbits", type=float,
                       help="run length in orbital periods")
        p.add_argument("--mode", choices=["builder", "direct"],
                       help="state-space assembly mode")
        p.add_argument("--no-j2", action="store_true",
                       help="disable the J2 term in the torque model")
        p.add_argument("--no-gg", action="store_true",
                       help="disable gravity-gradient torque")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel runs for sweep")

    p_orbit = sub.add_parser("orbit", help="propagate the orbit alone")
    add_common(p_orbit)
    p_orbit.set_defaults(func=cmd_orbit)

    p_sim = sub.add_parser("simulate", help="run the coupled simulation")
    add_common(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_eig = sub.add_parser("eig", help="eigenvalues of the assembled matrix")
    add_common(p_eig)
    p_eig.add_argument("--phase-deg", type=float, default=0.0,
                       help="true anomaly at which to assemble the matrix")
    p_eig.set_defaults(func=cmd_eig)

    p_sweep = sub.add_parser("sweep", help="eccentricity/inclination grid")
    add_common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", help="run the acceptance checks")
    add_common(p_val)
    p_val.add_argument("--only", nargs="+", metavar="AC-N",
                       help="run only the named criteria")
    p_val.set_defaults(func=cmd_validate)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ImpactError as exc:
        print(f"runtime abort: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
