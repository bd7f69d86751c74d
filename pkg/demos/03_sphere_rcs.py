# %% [markdown]
# # Is pi r^2 good enough for the calibration sphere?
#
# The exact Mie series for a perfectly conducting sphere tends to 9 pi r^2 x^4
# for small spheres and oscillates around pi r^2 for large ones. A 15 cm
# sphere at 3.19 cm wavelength has size parameter near 30, well into the
# optical region.

# %%
import math

import numpy as np

from spherecal import mie_backscatter_rcs, optical_rcs, regime_check, size_parameter

r, lam = 0.15, 0.0319
x = size_parameter(r, lam)
print(f"x = {x:.3f}  regime = {regime_check(x).value}")
print(f"pi r^2 = {optical_rcs(r):.6f} m^2, Mie = {mie_backscatter_rcs(r, lam):.6f} m^2")

# %% [markdown]
# Sweep the size parameter across all three regimes at fixed radius.

# %%
for x in np.geomspace(0.05, 300, 14):
    lam = 2 * math.pi * r / x
    ratio = mie_backscatter_rcs(r, lam) / optical_rcs(r)
    print(f"x={x:9.3f}  sigma/(pi r^2)={ratio:10.5f}  {regime_check(x).value}")

# %% [markdown]
# The radar constant does not care about sphere size: scaling radius and
# wavelength together scales the RCS by exactly k^2.

# %%
for k in (0.5, 2, 10):
    print(k, mie_backscatter_rcs(k * 0.15, k * 0.0319) / mie_backscatter_rcs(0.15, 0.0319))
