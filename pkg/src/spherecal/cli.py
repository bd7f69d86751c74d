"""Command-line front end.

Exit status: 0 success, 2 configuration or usage error, 3 numeric or domain
error (out-of-lobe angle, near-field range without override, Mie failure).
"""

import argparse
from dataclasses import replace
from pathlib import Path
import sys

from . import __version__
from .antenna import pattern_factor, pattern_loss_db
from .config import RunConfig, parse_config
from .errors import ConfigError, FarFieldError, SphereCalError
from .geometry import scene_state
from .rcs import mie_backscatter_rcs, optical_rcs, regime_check, size_parameter
from .reflectivity import far_field_min_range_m
from .sweep import format_value, rows_csv, run_sweep, summary_csv, table_text

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

FIG2_PANELS = {
    "fig2a": ("standoff_m", "theta_deg", "beta_deg"),
    "fig2b": ("standoff_m", "beta_deg", "sigma_eff_m2"),
    "fig2c": ("standoff_m", "theta_deg", "z_dbz"),
    "fig2d": ("standoff_m", "theta_deg", "delta_z_db"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(f"usage: {message}")


def _kv(out, key, value):
    if isinstance(value, float):
        value = format_value(value)
    out.write(f"{key}={value}\n")


def load_config(path):
    if path is None:
        return RunConfig()
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror or exc}", str(path)) from None
    return parse_config(data)


def _write_file(directory, name, text):
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        (directory / name).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise ConfigError(f"cannot write output: {exc.strerror or exc}", str(directory / name)) from None


def _require_far_field(cfg):
    if cfg.allow_near_field:
        return
    r_ff = far_field_min_range_m(cfg.radar)
    for L in cfg.standoffs_m:
        if L < r_ff:
            raise FarFieldError(L, r_ff)


def cmd_geom(cfg, args, out):
    standoffs = [args.standoff] if args.standoff is not None else cfg.standoffs_m
    records = []
    for L in standoffs:
        st = scene_state(replace(cfg.scene, standoff_distance_m=L), args.theta)
        x, y, z = st.sphere_position_m
        records.append((L, st.theta_deg, x, y, z, st.slant_range_m, st.off_axis_deg))
    header = ("standoff_m", "theta_deg", "sphere_x_m", "sphere_y_m", "sphere_z_m",
              "slant_range_m", "beta_deg")
    out.write(table_text(header, records))


def cmd_pattern(cfg, args, out):
    beta = abs(args.beta)
    factor = pattern_factor(beta, cfg.pattern)
    loss = pattern_loss_db(beta, cfg.pattern)
    _kv(out, "beta_deg", float(args.beta))
    _kv(out, "beamwidth_deg", float(cfg.pattern.beamwidth_deg))
    _kv(out, "pattern_exponent", cfg.pattern.pattern_exponent)
    _kv(out, "pattern_factor", factor)
    _kv(out, "pattern_loss_db", loss)


def cmd_rcs(cfg, args, out):
    r = args.radius if args.radius is not None else cfg.target.radius_m
    lam = args.wavelength if args.wavelength is not None else cfg.radar.wavelength_m
    x = size_parameter(r, lam)
    optical = optical_rcs(r)
    mie = mie_backscatter_rcs(r, lam)
    _kv(out, "radius_m", float(r))
    _kv(out, "wavelength_m", float(lam))
    _kv(out, "size_parameter", x)
    _kv(out, "regime", regime_check(x).value)
    _kv(out, "optical_rcs_m2", optical)
    _kv(out, "mie_rcs_m2", mie)
    _kv(out, "mie_to_optical_ratio", mie / optical)


def _sweep(cfg, err):
    _require_far_field(cfg)
    rows, summaries = run_sweep(
        cfg.scene, cfg.radar, cfg.target, cfg.pattern, cfg.standoffs_m,
        allow_near_field=cfg.allow_near_field,
    )
    for s in summaries:
        if s.n_errors:
            print(f"warning: {s.n_errors} grid points failed at standoff "
                  f"{format_value(s.standoff_m)} m (nan in output)", file=err)
    return rows, summaries


def cmd_sweep(cfg, args, out):
    rows, summaries = _sweep(cfg, args.stderr)
    if args.out is None:
        out.write(rows_csv(rows))
        return
    _write_file(args.out, "sweep.csv", rows_csv(rows))
    _write_file(args.out, "sweep_summary.csv", summary_csv(summaries))
    out.write(summary_csv(summaries))


def cmd_fig2(cfg, args, out):
    if args.config is not None:
        print("note: fig2 uses the built-in preset; --config ignored", file=args.stderr)
    rows, summaries = _sweep(RunConfig(), args.stderr)
    directory = args.out if args.out is not None else "."
    for name, columns in FIG2_PANELS.items():
        _write_file(directory, f"{name}.csv", rows_csv(rows, columns))
    text = summary_csv(summaries)
    _write_file(directory, "fig2_summary.csv", text)
    out.write(text)


def cmd_check(cfg, args, out):
    x = size_parameter(cfg.target.radius_m, cfg.radar.wavelength_m)
    r_ff = far_field_min_range_m(cfg.radar)
    nearest = min(cfg.standoffs_m)
    _kv(out, "size_parameter", x)
    _kv(out, "regime", regime_check(x).value)
    _kv(out, "far_field_min_range_m", r_ff)
    _kv(out, "min_standoff_m", float(nearest))
    _kv(out, "far_field_margin_m", nearest - r_ff)
    _kv(out, "far_field_ok", str(nearest >= r_ff).lower())
    if not cfg.allow_near_field:
        _require_far_field(cfg)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON configuration document")
    common.add_argument("--out", metavar="DIR", help="output directory")

    parser = _Parser(
        prog="spherecal", description="Wind-swing bias model for metal-sphere radar calibration."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("geom", parents=[common], help="sphere position and off-axis angle")
    p.add_argument("--theta", type=float, required=True, help="swing angle, degrees")
    p.add_argument("--standoff", type=float, help="standoff distance, metres")
    p.set_defaults(func=cmd_geom)

    p = sub.add_parser("pattern", parents=[common], help="pattern factor and loss")
    p.add_argument("--beta", type=float, required=True, help="off-axis angle, degrees")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("rcs", parents=[common], help="optical and Mie sphere RCS")
    p.add_argument("--radius", type=float, help="sphere radius, metres")
    p.add_argument("--wavelength", type=float, help="wavelength, metres")
    p.set_defaults(func=cmd_rcs)

    p = sub.add_parser("sweep", parents=[common], help="full swing x standoff sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fig2", parents=[common], help="reference sweep as four panel CSVs")
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("check", parents=[common], help="validate config and far field")
    p.set_defaults(func=cmd_check)
    return parser


def run_command(argv, stdout=None, stderr=None):
    """Run one CLI invocation and return its exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.stderr = stderr
        cfg = load_config(args.config)
        args.func(cfg, args, stdout)
    except ConfigError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CONFIG
    except SphereCalError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
