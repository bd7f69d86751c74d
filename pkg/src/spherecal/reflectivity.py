"""Radar power budget and the metal-sphere reflectivity chain.

Units: power in dBm, gains and constants in dB, range in kilometres inside the
dB chain, atmospheric loss in dB/km (two-way). The radar constant absorbs all
target and system terms, so absolute dBZ levels are uncalibrated; the bias
``delta_z_db`` relative to the boresight reading is the physically meaningful
output.
"""

from dataclasses import dataclass
import math

from .antenna import pattern_loss_db
from .errors import DomainError, FarFieldError

FOUR_PI_CUBED_DB = 30.0 * math.log10(4.0 * math.pi)


@dataclass(frozen=True)
class RadarParams:
    transmit_power_dbm: float = 50.0
    antenna_gain_db: float = 40.0
    wavelength_m: float = 0.0319
    radar_constant_db: float = 0.0
    atmospheric_loss_db_per_km: float = 0.02
    beamwidth_deg: float = 1.0
    beamwidth_rule_constant: float = 70.0

    def __post_init__(self):
        if not self.wavelength_m > 0:
            raise DomainError("wavelength_m must be positive")
        if not self.atmospheric_loss_db_per_km >= 0:
            raise DomainError("atmospheric_loss_db_per_km must be non-negative")
        if not self.beamwidth_deg > 0:
            raise DomainError("beamwidth_deg must be positive")
        if not self.beamwidth_rule_constant > 0:
            raise DomainError("beamwidth_rule_constant must be positive")


@dataclass(frozen=True)
class ReflectivityResult:
    z_dbz: float
    delta_z_db: float
    received_power_db: float | None = None


def received_power_linear(transmit_power, gain, wavelength_m, rcs_m2, range_m):
    """Point-target echo power P_t G^2 lambda^2 sigma / ((4 pi)^3 R^4), linear units."""
    return (
        transmit_power * gain**2 * wavelength_m**2 * rcs_m2
        / ((4.0 * math.pi) ** 3 * range_m**4)
    )


def received_power_db(params, rcs_m2, range_m):
    """Echo power in dBm, summed term by term in the log domain."""
    if not rcs_m2 > 0:
        raise DomainError("rcs_m2 must be positive")
    if not range_m > 0:
        raise DomainError("range_m must be positive")
    return (
        params.transmit_power_dbm
        + 2.0 * params.antenna_gain_db
        + 20.0 * math.log10(params.wavelength_m)
        + 10.0 * math.log10(rcs_m2)
        - FOUR_PI_CUBED_DB
        - 40.0 * math.log10(range_m)
    )


def _range_terms_db(params, range_m):
    r_km = range_m / 1000.0
    return 20.0 * math.log10(r_km) + r_km * params.atmospheric_loss_db_per_km


def far_field_min_range_m(params):
    """Far-field distance 2 D^2 / lambda with D inferred from the beamwidth rule.

    D = k lambda / beamwidth_deg, where k (default 70) is the rule constant.
    """
    d = params.beamwidth_rule_constant * params.wavelength_m / params.beamwidth_deg
    return 2.0 * d**2 / params.wavelength_m


def check_far_field(params, range_m):
    r_ff = far_field_min_range_m(params)
    if range_m < r_ff:
        raise FarFieldError(range_m, r_ff)
    return r_ff


def sphere_reflectivity_dbz(params, state, pattern, target=None, allow_near_field=False):
    """Reflectivity of the swinging sphere and its bias against the boresight reading.

    ``delta_z_db`` is Z(rest) - Z(state): the pattern loss at the state's
    off-axis angle, less the small change in the range terms between the rest
    range and the slant range. Passing ``target`` adds the received power of
    the pattern-attenuated sphere as a diagnostic.
    """
    if not allow_near_field:
        check_far_field(params, state.slant_range_m)
    loss = pattern_loss_db(state.off_axis_deg, pattern)
    L = state.standoff_m
    excess = state.slant_range_m - L
    range_shift = (
        20.0 * math.log1p(excess / L) / math.log(10.0)
        + excess / 1000.0 * params.atmospheric_loss_db_per_km
    )
    delta = loss - range_shift
    z = params.radar_constant_db + params.transmit_power_dbm + _range_terms_db(params, L) - delta
    p_r = None
    if target is not None:
        p_r = (
            received_power_db(params, target.optical_rcs_m2, state.slant_range_m) - loss
        )
    return ReflectivityResult(z, delta, p_r)


def compare_reflectivity(measured_dbz, ideal_dbz):
    """Signed calibration bias, measured minus ideal (dB)."""
    if not (math.isfinite(measured_dbz) and math.isfinite(ideal_dbz)):
        raise DomainError("reflectivities must be finite")
    return measured_dbz - ideal_dbz


def linear_to_dbz(z_linear):
    """mm^6 m^-3 to dBZ."""
    if not z_linear > 0:
        raise DomainError("linear reflectivity must be positive")
    return 10.0 * math.log10(z_linear)


def dbz_to_linear(z_dbz):
    return 10.0 ** (z_dbz / 10.0)
