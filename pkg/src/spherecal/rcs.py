"""Radar cross section of a metal calibration sphere.

Covers the optical-limit area pi r^2, scattering-regime classification by size
parameter, the exact Mie-series monostatic backscatter of a perfectly
conducting sphere, and the off-boresight equivalent RCS.
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np

from .antenna import pattern_factor
from .errors import DomainError, NumericError

MAX_SIZE_PARAMETER = 5000.0

# rescale the downward recurrence before values can overflow
_RESCALE_AT = 1e250


class Regime(str, Enum):
    RAYLEIGH = "rayleigh"
    MIE = "mie"
    OPTICAL = "optical"


@dataclass(frozen=True)
class SphereTarget:
    radius_m: float = 0.15
    optical_rcs_m2: float = field(init=False)

    def __post_init__(self):
        if not self.radius_m > 0:
            raise DomainError("radius_m must be positive")
        object.__setattr__(self, "optical_rcs_m2", optical_rcs(self.radius_m))


def optical_rcs(radius_m):
    """Geometric-optics backscatter area pi r^2."""
    return math.pi * radius_m**2


def size_parameter(radius_m, wavelength_m):
    """2 pi r / lambda."""
    if not (radius_m > 0 and wavelength_m > 0):
        raise DomainError("radius_m and wavelength_m must be positive")
    return 2.0 * math.pi * radius_m / wavelength_m


def regime_check(x, optical_threshold=10.0, rayleigh_threshold=0.5):
    """Classify a size parameter.

    Only :attr:`Regime.OPTICAL` justifies replacing the sphere RCS by pi r^2.
    """
    if not x > 0:
        raise DomainError("size parameter must be positive")
    if x < rayleigh_threshold:
        return Regime.RAYLEIGH
    if x >= optical_threshold:
        return Regime.OPTICAL
    return Regime.MIE


def wiscombe_order(x):
    """Classic partial-wave count ceil(x + 4 x^(1/3) + 2)."""
    return int(math.ceil(x + 4.0 * x ** (1.0 / 3.0) + 2.0))


def mie_truncation_order(x):
    """Default partial-wave count for backscatter.

    The classic count leaves a relative tail of 1e-9 to 1e-7 for x >= 30;
    another ceil(4 x^(1/3)) + 10 orders push it below 1e-13 up to x = 5000.
    """
    return wiscombe_order(x) + int(math.ceil(4.0 * x ** (1.0 / 3.0))) + 10


def spherical_jn_array(nmax, x):
    """j_0 .. j_nmax at real x > 0 by Miller's downward recurrence.

    The recurrence is started well above both nmax and x from an arbitrary
    seed, then normalised against whichever of the closed forms j_0, j_1 is
    larger in magnitude (the other may sit near a zero).
    """
    if not x > 0:
        raise DomainError("x must be positive")
    m = max(nmax, 1)
    top = int(max(m, x)) + int(math.sqrt(40.0 * max(m, x))) + 16
    out = np.zeros(m + 1)
    j_next, j_cur = 0.0, 1e-300
    for n in range(top, 0, -1):
        j_prev = (2 * n + 1) / x * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if abs(j_cur) > _RESCALE_AT:
            j_next /= _RESCALE_AT
            j_cur /= _RESCALE_AT
            out /= _RESCALE_AT
        # j_cur now holds order n - 1, j_next order n
        if n <= m:
            out[n] = j_next
    out[0] = j_cur

    s, c = math.sin(x), math.cos(x)
    j0 = s / x
    j1 = s / x**2 - c / x
    out *= j0 / out[0] if abs(j0) >= abs(j1) else j1 / out[1]
    return out[: nmax + 1]


def spherical_yn_array(nmax, x):
    """y_0 .. y_nmax at real x > 0 by upward recurrence (stable for y_n)."""
    if not x > 0:
        raise DomainError("x must be positive")
    s, c = math.sin(x), math.cos(x)
    out = [-c / x, -c / x**2 - s / x]
    for n in range(1, nmax):
        nxt = (2 * n + 1) / x * out[n] - out[n - 1]
        if not math.isfinite(nxt):
            raise NumericError(
                f"spherical y_n recurrence overflowed at order n={n + 1} (x={x:.6g})",
                order=n + 1,
            )
        out.append(nxt)
    return np.array(out[: nmax + 1])


def mie_backscatter_sum(x, n_terms=None):
    """Complex partial-wave sum sum (-1)^n (2n+1)(a_n - b_n) for a PEC sphere.

    a_n = j_n / h_n and b_n = [x j_n]' / [x h_n]' with h_n = j_n + i y_n.
    """
    if not x > 0:
        raise DomainError("size parameter must be positive")
    if x > MAX_SIZE_PARAMETER:
        raise DomainError(f"size parameter {x:.6g} exceeds {MAX_SIZE_PARAMETER:g}")
    N = mie_truncation_order(x) if n_terms is None else int(n_terms)
    if N < 1:
        raise DomainError("n_terms must be at least 1")
    j = spherical_jn_array(N, x)
    y = spherical_yn_array(N, x)
    h = j + 1j * y
    n = np.arange(1, N + 1)
    a = j[1:] / h[1:]
    # [x z_n]' = x z_{n-1} - n z_n
    b = (x * j[:-1] - n * j[1:]) / (x * h[:-1] - n * h[1:])
    terms = np.where(n % 2, -1.0, 1.0) * (2 * n + 1) * (a - b)
    partial = np.cumsum(terms)
    bad = np.flatnonzero(~np.isfinite(partial))
    if bad.size:
        order = int(n[bad[0]])
        raise NumericError(
            f"Mie series became non-finite at order n={order} (x={x:.6g})", order=order
        )
    return complex(partial[-1])


def mie_backscatter_rcs(radius_m, wavelength_m, n_terms=None):
    """Exact monostatic backscatter RCS (m^2) of a perfectly conducting sphere.

    sigma = lambda^2 / (4 pi) |sum_n (-1)^n (2n+1)(a_n - b_n)|^2.
    Tends to 9 pi r^2 x^4 for x << 1 and oscillates about pi r^2 for x >> 1.
    """
    x = size_parameter(radius_m, wavelength_m)
    s = mie_backscatter_sum(x, n_terms)
    return wavelength_m**2 / (4.0 * math.pi) * abs(s) ** 2


def equivalent_rcs(target, beta_deg, pattern):
    """Off-boresight RCS: optical RCS times one pattern factor.

    Deliberately ignores ``pattern.pattern_exponent``; the two-way loss is
    applied in the reflectivity chain instead.
    """
    return target.optical_rcs_m2 * pattern_factor(beta_deg, pattern)
