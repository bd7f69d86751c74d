"""Exception hierarchy shared by all modules."""


class SphereCalError(Exception):
    """Base class for every error raised by spherecal."""


class DomainError(SphereCalError, ValueError):
    """An input lies outside the domain of a formula."""


class InvalidGeometryError(SphereCalError, ValueError):
    """A direction vector degenerated to zero length."""


class OutOfLobeError(SphereCalError, ValueError):
    """Off-axis angle at or beyond the first null of the sinc pattern."""

    def __init__(self, beta_deg, beamwidth_deg):
        self.beta_deg = beta_deg
        self.beamwidth_deg = beamwidth_deg
        super().__init__(
            f"off-axis angle {beta_deg:.6g} deg is at or beyond the first "
            f"pattern null ({beamwidth_deg / 2:.6g} deg)"
        )


class FarFieldError(SphereCalError, ValueError):
    """Target range is shorter than the antenna far-field distance."""

    def __init__(self, range_m, min_range_m):
        self.range_m = range_m
        self.min_range_m = min_range_m
        super().__init__(
            f"range {range_m:.6g} m is inside the far-field limit "
            f"{min_range_m:.6g} m (set allow_near_field to override)"
        )


class NumericError(SphereCalError, ArithmeticError):
    """A series or recurrence produced a non-finite value."""

    def __init__(self, message, order=None):
        self.order = order
        super().__init__(message)


class ConfigError(SphereCalError):
    """Malformed, unknown or invalid configuration entry.

    ``key`` holds the offending key path (``standoff_m[2]``) when known.
    """

    def __init__(self, message, key=None):
        self.key = key
        super().__init__(f"{key}: {message}" if key else message)
