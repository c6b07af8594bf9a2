"""plotviz command line: regenerate figures from dualspin CSV output.

    plotviz timeseries --csv RUN1.csv RUN2.csv --cols theta_s --out fig.png
    plotviz sweep --csv sweep.csv --cols peak_psi_s_deg --x e --out fig.svg

Exit codes: 0 success, 2 on any input error (bad schema, missing column,
empty data, bad plot options).
"""
from __future__ import annotations

import argparse
import sys

from .csvio import CsvFormatError
from .plots import PlotSpec, plot_sweep_summary, plot_timeseries


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotviz", description="Figure generation for dualspin telemetry")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--csv", nargs="+", required=True,
                       help="input CSV file(s)")
        p.add_argument("--cols", nargs="+", required=True,
                       help="column name(s) to plot")
        p.add_argument("--out", required=True,
                       help="output image (.png or .svg)")
        p.add_argument("--labels", nargs="+", default=None,
                       help="legend labels, one per CSV")
        p.add_argument("--ylim", nargs=2, type=float, default=None,
                       metavar=("LO", "HI"), help="pin the y-axis range")

    p_ts = sub.add_parser("timeseries", help="signal(s) against time")
    add_common(p_ts)
    p_ts.add_argument("--per-orbit", action="store_true",
                      help="time axis in orbit fractions")

    p_sw = sub.add_parser("sweep", help="sweep metric against e or i")
    add_common(p_sw)
    p_sw.add_argument("--x", choices=["e", "i_deg"], default="e",
                      help="abscissa variable")

    args = parser.parse_args(argv)
    try:
        spec = PlotSpec(
            csv_paths=tuple(args.csv), columns=tuple(args.cols),
            out_path=args.out,
            labels=tuple(args.labels) if args.labels else (),
            per_orbit=getattr(args, "per_orbit", False),
            x_column=getattr(args, "x", "e"),
            ylim=tuple(args.ylim) if args.ylim else None)
        if args.command == "timeseries":
            out = plot_timeseries(spec)
        else:
            out = plot_sweep_summary(spec)
    except (CsvFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
