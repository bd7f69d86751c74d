"""Normalized-sinc antenna pattern and the reflectivity loss it causes."""

from dataclasses import dataclass
import math

from .errors import DomainError, OutOfLobeError


@dataclass(frozen=True)
class AntennaPattern:
    """Sinc pattern whose first null sits at half the beamwidth.

    ``pattern_exponent`` is the number of |sinc| factors applied to received
    power: 2 models the two-way (transmit and receive) path, 1 evaluates the
    single-factor equivalent-RCS form literally.
    """

    beamwidth_deg: float = 1.0
    pattern_exponent: int = 2

    def __post_init__(self):
        if not self.beamwidth_deg > 0:
            raise DomainError("beamwidth_deg must be positive")
        if self.pattern_exponent not in (1, 2) or isinstance(self.pattern_exponent, bool):
            raise DomainError("pattern_exponent must be 1 or 2")


def normalized_sinc(x):
    """sin(pi x) / (pi x), equal to 1 at the origin and 0 at nonzero integers."""
    if x == 0:
        return 1.0
    if x == int(x):
        return 0.0
    px = math.pi * x
    return math.sin(px) / px


def pattern_factor(beta_deg, pattern):
    """Single-factor attenuation |sinc(beta / (beamwidth / 2))| in [0, 1]."""
    if beta_deg < 0:
        raise DomainError("beta_deg must be non-negative; pass the magnitude")
    return abs(normalized_sinc(beta_deg / (pattern.beamwidth_deg / 2)))


def pattern_loss_db(beta_deg, pattern):
    """Reflectivity loss in dB, -10 p log10(pattern_factor).

    Raises OutOfLobeError at or past the first null, where the loss is
    unbounded or the sinc sidelobe model no longer describes the main lobe.
    """
    if beta_deg >= pattern.beamwidth_deg / 2:
        raise OutOfLobeError(beta_deg, pattern.beamwidth_deg)
    f = pattern_factor(beta_deg, pattern)
    if f == 1.0:
        return 0.0
    return -10.0 * pattern.pattern_exponent * math.log10(f)
