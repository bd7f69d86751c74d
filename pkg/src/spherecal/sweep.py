"""Swing-angle x standoff sweeps and their CSV tables.

A failed grid point never aborts a sweep: its failing columns hold NaN
(written as ``nan`` in CSV), the reason is kept on the row, and the per-standoff
summary counts it.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
import csv
import io
import math
import os
from pathlib import Path

import numpy as np

from .errors import ConfigError, SphereCalError
from .geometry import scene_state
from .rcs import equivalent_rcs
from .reflectivity import sphere_reflectivity_dbz

ROW_HEADER = (
    "standoff_m",
    "theta_deg",
    "beta_deg",
    "slant_range_m",
    "sigma_eff_m2",
    "z_dbz",
    "delta_z_db",
)
SUMMARY_HEADER = ("standoff_m", "beta_max_deg", "delta_z_max_db", "argmax_theta_deg")
SIGNIFICANT_DIGITS = 9
THREADS_ENV = "SPHERECAL_THREADS"

NAN = float("nan")


@dataclass(frozen=True)
class SweepRow:
    standoff_m: float
    theta_deg: float
    beta_deg: float
    slant_range_m: float
    sigma_eff_m2: float
    z_dbz: float
    delta_z_db: float
    error: str | None = None

    def values(self):
        return tuple(getattr(self, k) for k in ROW_HEADER)


@dataclass(frozen=True)
class SweepSummary:
    """Extrema over the swing grid for one standoff distance."""

    standoff_m: float
    beta_max_deg: float
    delta_z_max_db: float
    argmax_theta_deg: float
    n_errors: int = 0

    def values(self):
        return tuple(getattr(self, k) for k in SUMMARY_HEADER)


def _evaluate(cfg, params, target, pattern, theta, allow_near_field):
    try:
        state = scene_state(cfg, float(theta))
    except SphereCalError as exc:
        return SweepRow(cfg.standoff_distance_m, float(theta), NAN, NAN, NAN, NAN, NAN, str(exc))
    try:
        sigma = equivalent_rcs(target, state.off_axis_deg, pattern)
    except SphereCalError as exc:
        return SweepRow(state.standoff_m, state.theta_deg, state.off_axis_deg,
                        state.slant_range_m, NAN, NAN, NAN, str(exc))
    try:
        res = sphere_reflectivity_dbz(params, state, pattern, allow_near_field=allow_near_field)
    except SphereCalError as exc:
        return SweepRow(state.standoff_m, state.theta_deg, state.off_axis_deg,
                        state.slant_range_m, sigma, NAN, NAN, str(exc))
    return SweepRow(state.standoff_m, state.theta_deg, state.off_axis_deg,
                    state.slant_range_m, sigma, res.z_dbz, res.delta_z_db)


def thread_count(threads=None):
    """Worker count: explicit argument, else ``SPHERECAL_THREADS``, else CPU count."""
    if threads is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        if not env:
            return os.cpu_count() or 1
        try:
            threads = int(env)
        except ValueError:
            raise ConfigError(f"expected a positive integer, got {env!r}", THREADS_ENV) from None
    if threads < 1:
        raise ConfigError("must be at least 1", THREADS_ENV)
    return int(threads)


def summarize(rows, standoff_m):
    """Maxima of beta and delta Z over the rows belonging to one standoff."""
    mine = [r for r in rows if r.standoff_m == standoff_m]
    n_errors = sum(r.error is not None for r in mine)
    betas = np.array([r.beta_deg for r in mine], float)
    dz = np.array([r.delta_z_db for r in mine], float)
    beta_max = float(np.nanmax(betas)) if np.any(np.isfinite(betas)) else NAN
    if np.any(np.isfinite(dz)):
        i = int(np.nanargmax(dz))
        return SweepSummary(standoff_m, beta_max, float(dz[i]), mine[i].theta_deg, n_errors)
    return SweepSummary(standoff_m, beta_max, NAN, NAN, n_errors)


def run_sweep(cfg, params, target, pattern, standoffs_m, allow_near_field=False, threads=None):
    """Evaluate every (standoff, theta) grid point.

    Returns ``(rows, summaries)``: rows ordered by ascending standoff then
    theta (duplicate standoffs collapse to one), one
    :class:`SweepSummary` per standoff. Results do not depend on ``threads``.
    """
    standoffs = sorted({float(L) for L in standoffs_m})
    if not standoffs:
        raise ValueError("standoffs_m must not be empty")
    thetas = cfg.theta_grid()
    tasks = []
    for L in standoffs:
        cfg_L = replace(cfg, standoff_distance_m=L)
        tasks.extend((cfg_L, th) for th in thetas)

    def job(task):
        return _evaluate(task[0], params, target, pattern, task[1], allow_near_field)

    n = thread_count(threads)
    if n == 1:
        rows = [job(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(job, tasks))
    summaries = [summarize(rows, L) for L in standoffs]
    return rows, summaries


def format_value(v):
    """Positional decimal with 9 significant digits, trailing zeros trimmed."""
    if isinstance(v, float) and math.isnan(v):
        return "nan"
    s = np.format_float_positional(
        float(v), precision=SIGNIFICANT_DIGITS, unique=False, fractional=False, trim="-"
    )
    return "0" if s == "-0" else s


def table_text(header, records):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for rec in records:
        w.writerow([format_value(v) for v in rec])
    return buf.getvalue()


def rows_csv(rows, columns=ROW_HEADER):
    """CSV text for rows, optionally projected onto a subset of columns."""
    return table_text(columns, [tuple(getattr(r, c) for c in columns) for r in rows])


def summary_csv(summaries):
    return table_text(SUMMARY_HEADER, [s.values() for s in summaries])


def summary_path_for(path):
    path = Path(path)
    return path.with_name(f"{path.stem}_summary{path.suffix or '.csv'}")


def _write(text, destination):
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        Path(destination).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {destination}: {exc.strerror or exc}") from exc


def emit_csv(rows, summaries, destination, summary_destination=None):
    """Write the row table and its summary; return the row table as bytes.

    ``destination`` is a path or a text stream. For a path the summary goes to
    the sibling ``<stem>_summary.csv`` unless ``summary_destination`` is given;
    for a stream it is written only when ``summary_destination`` is given.
    """
    text = rows_csv(rows)
    _write(text, destination)
    if summary_destination is None and not hasattr(destination, "write"):
        summary_destination = summary_path_for(destination)
    if summary_destination is not None:
        _write(summary_csv(summaries), summary_destination)
    return text.encode("utf-8")
