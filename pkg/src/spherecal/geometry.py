"""Scene geometry for a sphere swinging beneath a hovering platform.

Frame: radar at the origin, x along the horizontal ground range toward the
target, z up, y completing a right-handed frame. The antenna boresight points
at the sphere's rest position; wind swings the sphere in the y-z plane about
the (stationary) platform.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError, InvalidGeometryError


@dataclass(frozen=True)
class SceneConfig:
    """Standoff, elevation, tether and oscillation grid.

    Angles are in degrees, lengths in metres.
    """

    standoff_distance_m: float = 2000.0
    elevation_deg: float = 2.0
    tether_length_m: float = 60.0
    theta_min_deg: float = -10.0
    theta_max_deg: float = 10.0
    theta_steps: int = 201

    def __post_init__(self):
        if not self.tether_length_m > 0:
            raise DomainError("tether_length_m must be positive")
        if not self.standoff_distance_m > self.tether_length_m:
            raise DomainError("standoff_distance_m must exceed tether_length_m")
        if not 0 <= self.elevation_deg < 90:
            raise DomainError("elevation_deg must lie in [0, 90)")
        for name in ("theta_min_deg", "theta_max_deg"):
            if not -90 <= getattr(self, name) <= 90:
                raise DomainError(f"{name} must lie in [-90, 90]")
        if self.theta_min_deg > self.theta_max_deg:
            raise DomainError("theta_min_deg must not exceed theta_max_deg")
        if int(self.theta_steps) != self.theta_steps or self.theta_steps < 1:
            raise DomainError("theta_steps must be a positive integer")
        if self.theta_steps == 1 and self.theta_min_deg != self.theta_max_deg:
            raise DomainError("a one-point grid needs theta_min_deg == theta_max_deg")

    def theta_grid(self):
        """Uniform oscillation grid in degrees, both endpoints included."""
        return np.linspace(self.theta_min_deg, self.theta_max_deg, int(self.theta_steps))


@dataclass(frozen=True)
class SceneState:
    theta_deg: float
    sphere_position_m: np.ndarray
    slant_range_m: float
    off_axis_deg: float
    standoff_m: float


def rest_position(cfg):
    """Sphere position at zero swing; also the boresight aim point."""
    e = np.radians(cfg.elevation_deg)
    L = cfg.standoff_distance_m
    return np.array([L * np.cos(e), 0.0, L * np.sin(e)])


def platform_position(cfg):
    return rest_position(cfg) + np.array([0.0, 0.0, cfg.tether_length_m])


def _unit(v):
    n = np.linalg.norm(v)
    if not n > 0:
        raise InvalidGeometryError(f"zero-length direction vector {v!r}")
    return v / n


def angle_between_deg(u, v):
    """Angle between two vectors in degrees.

    Uses atan2(|u x v|, u . v), which stays accurate for the sub-degree
    angles met here where acos of a dot product loses half its digits.
    """
    a, b = _unit(np.asarray(u, float)), _unit(np.asarray(v, float))
    return float(np.degrees(np.arctan2(np.linalg.norm(np.cross(a, b)), np.dot(a, b))))


def scene_state(cfg, theta_deg):
    """Evaluate sphere position, slant range and off-axis angle at one swing angle."""
    if not -90 <= theta_deg <= 90:
        raise DomainError(f"theta_deg={theta_deg} outside [-90, 90]")
    rest = rest_position(cfg)
    L = float(cfg.standoff_distance_m)
    if theta_deg == 0:
        # exact zero reference, free of round-off from the pivot arithmetic
        return SceneState(0.0, rest, L, 0.0, L)
    th = np.radians(theta_deg)
    l = cfg.tether_length_m
    # displacement from rest; 1 - cos(th) written as 2 sin^2(th/2) to avoid cancellation
    d = l * np.array([0.0, np.sin(th), 2.0 * np.sin(th / 2.0) ** 2])
    sphere = rest + d
    norm = float(np.linalg.norm(sphere))
    if not norm > 0:
        raise InvalidGeometryError("sphere coincides with the radar")
    # R - L from R^2 - L^2 = 2 rest.d + d.d, so R == L exactly when d is negligible
    r = L + (2.0 * (rest @ d) + d @ d) / (norm + L)
    # angle between rest and rest + d, with rest x (rest + d) = rest x d;
    # hypot keeps tiny cross products from underflowing
    beta = float(np.degrees(np.arctan2(math.hypot(*np.cross(rest, d)), rest @ rest + rest @ d)))
    return SceneState(float(theta_deg), sphere, r, beta, L)
