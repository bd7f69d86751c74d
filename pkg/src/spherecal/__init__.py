"""Wind-swing bias model for weather radar calibration with a suspended metal sphere.

The forward chain runs swing angle -> scene geometry -> off-axis angle ->
sinc antenna pattern -> equivalent RCS and reflectivity bias.
"""

__version__ = "0.1.0"

from .antenna import AntennaPattern, normalized_sinc, pattern_factor, pattern_loss_db
from .config import RunConfig, parse_config
from .errors import (
    ConfigError,
    DomainError,
    FarFieldError,
    InvalidGeometryError,
    NumericError,
    OutOfLobeError,
    SphereCalError,
)
from .geometry import SceneConfig, SceneState, platform_position, rest_position, scene_state
from .rcs import (
    Regime,
    SphereTarget,
    equivalent_rcs,
    mie_backscatter_rcs,
    optical_rcs,
    regime_check,
    size_parameter,
)
from .reflectivity import (
    RadarParams,
    ReflectivityResult,
    compare_reflectivity,
    dbz_to_linear,
    far_field_min_range_m,
    linear_to_dbz,
    received_power_db,
    received_power_linear,
    sphere_reflectivity_dbz,
)
from .sweep import SweepRow, SweepSummary, emit_csv, run_sweep
