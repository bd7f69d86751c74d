"""JSON run configuration with defaults and strict key checking."""

from dataclasses import dataclass, field
import json
import math

from .antenna import AntennaPattern
from .errors import ConfigError
from .geometry import SceneConfig
from .rcs import SphereTarget
from .reflectivity import RadarParams

DEFAULTS = {
    "standoff_m": [2000.0, 3000.0, 4000.0, 5000.0],
    "tether_length_m": 60.0,
    "elevation_deg": 2.0,
    "theta_min_deg": -10.0,
    "theta_max_deg": 10.0,
    "theta_steps": 201,
    "sphere_radius_m": 0.15,
    "wavelength_m": 0.0319,
    "beamwidth_deg": 1.0,
    "pattern_exponent": 2,
    "transmit_power_dbm": 50.0,
    "radar_constant_db": 0.0,
    "atmospheric_loss_db_per_km": 0.02,
    "beamwidth_rule_constant": 70.0,
    "allow_near_field": False,
}

MAX_THETA_STEPS = 1_000_000


@dataclass(frozen=True)
class RunConfig:
    scene: SceneConfig = field(default_factory=SceneConfig)
    radar: RadarParams = field(default_factory=RadarParams)
    target: SphereTarget = field(default_factory=SphereTarget)
    pattern: AntennaPattern = field(default_factory=AntennaPattern)
    standoffs_m: tuple = tuple(DEFAULTS["standoff_m"])
    allow_near_field: bool = False


def _number(value, key):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {type(value).__name__}", key)
    try:
        out = float(value)
    except OverflowError:
        raise ConfigError("number out of range", key) from None
    if not math.isfinite(out):
        raise ConfigError("must be finite", key)
    return out


def _integer(value, key):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {type(value).__name__}", key)
    return value


def _require(ok, key, message):
    if not ok:
        raise ConfigError(message, key)


def _validate(raw):
    v = {}
    for key in DEFAULTS:
        if key in ("standoff_m", "theta_steps", "pattern_exponent", "allow_near_field"):
            continue
        v[key] = _number(raw[key], key)

    steps = _integer(raw["theta_steps"], "theta_steps")
    _require(1 <= steps <= MAX_THETA_STEPS, "theta_steps", f"must lie in [1, {MAX_THETA_STEPS}]")
    v["theta_steps"] = steps
    p = _integer(raw["pattern_exponent"], "pattern_exponent")
    _require(p in (1, 2), "pattern_exponent", "must be 1 or 2")
    v["pattern_exponent"] = p
    _require(isinstance(raw["allow_near_field"], bool), "allow_near_field", "expected true or false")
    v["allow_near_field"] = raw["allow_near_field"]

    _require(v["tether_length_m"] > 0, "tether_length_m", "must be positive")
    _require(0 <= v["elevation_deg"] < 90, "elevation_deg", "must lie in [0, 90)")
    for key in ("theta_min_deg", "theta_max_deg"):
        _require(-90 <= v[key] <= 90, key, "must lie in [-90, 90]")
    _require(v["theta_min_deg"] <= v["theta_max_deg"], "theta_min_deg", "must not exceed theta_max_deg")
    _require(
        steps > 1 or v["theta_min_deg"] == v["theta_max_deg"],
        "theta_steps",
        "a one-point grid needs theta_min_deg == theta_max_deg",
    )
    _require(v["sphere_radius_m"] > 0, "sphere_radius_m", "must be positive")
    _require(v["wavelength_m"] > 0, "wavelength_m", "must be positive")
    _require(v["beamwidth_deg"] > 0, "beamwidth_deg", "must be positive")
    _require(v["atmospheric_loss_db_per_km"] >= 0, "atmospheric_loss_db_per_km", "must be non-negative")
    _require(v["beamwidth_rule_constant"] > 0, "beamwidth_rule_constant", "must be positive")

    standoffs = raw["standoff_m"]
    _require(isinstance(standoffs, list), "standoff_m", "expected a list of numbers")
    _require(len(standoffs) > 0, "standoff_m", "must not be empty")
    v["standoff_m"] = []
    for i, item in enumerate(standoffs):
        key = f"standoff_m[{i}]"
        L = _number(item, key)
        _require(L > v["tether_length_m"], key, "must exceed tether_length_m")
        v["standoff_m"].append(L)
    return v


def build_config(values):
    """RunConfig from a mapping of config keys; absent keys take defaults."""
    unknown = sorted(set(values) - set(DEFAULTS))
    if unknown:
        raise ConfigError("unknown configuration key", unknown[0])
    v = _validate({**DEFAULTS, **values})
    scene = SceneConfig(
        standoff_distance_m=v["standoff_m"][0],
        elevation_deg=v["elevation_deg"],
        tether_length_m=v["tether_length_m"],
        theta_min_deg=v["theta_min_deg"],
        theta_max_deg=v["theta_max_deg"],
        theta_steps=v["theta_steps"],
    )
    radar = RadarParams(
        transmit_power_dbm=v["transmit_power_dbm"],
        wavelength_m=v["wavelength_m"],
        radar_constant_db=v["radar_constant_db"],
        atmospheric_loss_db_per_km=v["atmospheric_loss_db_per_km"],
        beamwidth_deg=v["beamwidth_deg"],
        beamwidth_rule_constant=v["beamwidth_rule_constant"],
    )
    return RunConfig(
        scene=scene,
        radar=radar,
        target=SphereTarget(v["sphere_radius_m"]),
        pattern=AntennaPattern(v["beamwidth_deg"], v["pattern_exponent"]),
        standoffs_m=tuple(v["standoff_m"]),
        allow_near_field=v["allow_near_field"],
    )


def parse_config(data):
    """Parse a JSON object document (bytes or str) into a RunConfig.

    Raises ConfigError for malformed JSON (with line and column), unknown keys,
    and invalid values (with the offending key path).
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ConfigError(f"config is not valid UTF-8 (byte offset {exc.start})") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"malformed JSON at line {exc.lineno} column {exc.colno} "
            f"(offset {exc.pos}): {exc.msg}"
        ) from None
    except (RecursionError, ValueError) as exc:
        raise ConfigError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    return build_config(doc)
