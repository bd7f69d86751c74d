# %% [markdown]
# # Where does the sphere go when the wind pushes it?
#
# The radar sits at the origin and aims at the sphere's rest point, a distance
# L away at 2 degrees elevation. The platform hovers 60 m above that point and
# the sphere swings sideways on its line. This script walks through the
# geometry and shows how small the resulting off-axis angle is.

# %%
import numpy as np

from spherecal import SceneConfig, platform_position, rest_position, scene_state

cfg = SceneConfig(standoff_distance_m=2000.0)
print("rest point     ", np.round(rest_position(cfg), 3))
print("platform       ", np.round(platform_position(cfg), 3))

# %% [markdown]
# Swing the sphere through the +/-10 degree range. The off-axis angle grows
# roughly linearly with the swing and is symmetric in its sign.

# %%
for theta in (-10, -5, 0, 5, 10):
    s = scene_state(cfg, theta)
    print(f"theta={theta:+4d} deg  beta={s.off_axis_deg:.5f} deg  R={s.slant_range_m:.4f} m")

# %% [markdown]
# Moving the platform farther away shrinks the angle in proportion to 1/L.

# %%
for L in (2000, 3000, 4000, 5000):
    beta = scene_state(SceneConfig(standoff_distance_m=L), 10).off_axis_deg
    print(f"L={L} m  beta(10 deg)={beta:.4f} deg  beta*L={np.radians(beta) * L:.3f} m")
