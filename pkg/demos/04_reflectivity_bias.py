# %% [markdown]
# # From swing angle to reflectivity bias
#
# The reflectivity chain adds the range terms to the radar constant and
# transmit power and subtracts the pattern loss. Comparing a swung reading
# with the boresight reading gives the calibration bias.

# %%
from spherecal import (
    AntennaPattern,
    RadarParams,
    SceneConfig,
    compare_reflectivity,
    far_field_min_range_m,
    scene_state,
    sphere_reflectivity_dbz,
)

radar = RadarParams(transmit_power_dbm=50.0, radar_constant_db=0.0, atmospheric_loss_db_per_km=0.02)
pattern = AntennaPattern(beamwidth_deg=1.0, pattern_exponent=2)
print(f"far-field minimum range: {far_field_min_range_m(radar):.1f} m")

for L in (2000, 5000):
    cfg = SceneConfig(standoff_distance_m=L)
    ideal = sphere_reflectivity_dbz(radar, scene_state(cfg, 0), pattern)
    swung = sphere_reflectivity_dbz(radar, scene_state(cfg, 10), pattern)
    bias = compare_reflectivity(swung.z_dbz, ideal.z_dbz)
    print(f"L={L} m  Z ideal={ideal.z_dbz:.3f} dBZ  Z swung={swung.z_dbz:.3f} dBZ  "
          f"bias={bias:+.3f} dB  dZ={swung.delta_z_db:.3f} dB")
