# %% [markdown]
# # Full sweep over swing angle and standoff distance
#
# Runs the reference scenario (L = 2..5 km, +/-10 degree swing, 60 m line,
# 2 degree elevation, 1 degree beamwidth, two-way pattern) and writes the
# tables next to this script. If matplotlib is available the four panels are
# drawn as well.

# %%
from pathlib import Path

import numpy as np

from spherecal import AntennaPattern, RadarParams, SceneConfig, SphereTarget, emit_csv, run_sweep

rows, summaries = run_sweep(
    SceneConfig(), RadarParams(), SphereTarget(0.15), AntennaPattern(1.0, 2), [2000, 3000, 4000, 5000]
)
for s in summaries:
    print(f"L={s.standoff_m:.0f} m  beta_max={s.beta_max_deg:.4f} deg  dZ_max={s.delta_z_max_db:.3f} dB")

out = Path(__file__).with_name("sweep_output")
out.mkdir(exist_ok=True)
emit_csv(rows, summaries, out / "sweep.csv")
print("wrote", out / "sweep.csv")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(2, 2, figsize=(9, 7))
    for s in summaries:
        mine = [r for r in rows if r.standoff_m == s.standoff_m]
        th = np.array([r.theta_deg for r in mine])
        label = f"L = {s.standoff_m / 1000:.0f} km"
        axes[0, 0].plot(th, [r.beta_deg for r in mine], label=label)
        axes[0, 1].plot([r.beta_deg for r in mine], [r.sigma_eff_m2 for r in mine], label=label)
        axes[1, 0].plot(th, [r.z_dbz for r in mine], label=label)
        axes[1, 1].plot(th, [r.delta_z_db for r in mine], label=label)
    for ax, (xl, yl) in zip(axes.flat, [("theta (deg)", "beta (deg)"), ("beta (deg)", "sigma' (m^2)"),
                                        ("theta (deg)", "Z (dBZ)"), ("theta (deg)", "dZ (dB)")]):
        ax.set_xlabel(xl)
        ax.set_ylabel(yl)
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out / "panels.png", dpi=120)
    print("wrote", out / "panels.png")
