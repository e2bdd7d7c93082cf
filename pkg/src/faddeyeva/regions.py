"""Partition of the first quadrant and per-region tuning.

Points are measured with the elliptic metric

    rho(z) = sqrt((x/x0)^2 + (y/y0)^2),   x0 = 6.3, y0 = 4.4

which separates the power-series region S (rho <= 0.292), the
downward-Taylor region R (rho < 1) and the continued-fraction region Q.
With the remedy enabled, the strip 1.8396 <= x <= 20, y <= 0.031623 is
evaluated by an upward Taylor expansion about the real point x instead,
whatever its rho.

The term-count and step-size schedules are step functions of rho.  Their
knot values come from scripts/calibrate.py and are committed here as
literals.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass

__all__ = [
    "Region",
    "TuningParams",
    "DEFAULT_PARAMS",
    "TUNING_VERSION",
    "rho",
    "classify",
    "nu_for",
    "downward_params",
    "step_schedule",
]

TUNING_VERSION = "3"

NU_MIN = 3
NU_MAX = 16

Schedule = tuple[tuple[float, float], ...]


class Region(str, enum.Enum):
    S = "S"
    R = "R"
    Q = "Q"
    STRIP = "RemedyStrip"

    def __str__(self) -> str:
        return self.value


# Knots from scripts/calibrate.py: on each band [rho_i, rho_i+1) the value
# keeps the componentwise error against the oracle within 2e-13 on the
# probe set.  rho -> convergents in Q:
_NU_SCHEDULE: Schedule = (
    (1.0, 16),
    (1.1, 15),
    (1.2, 13),
    (1.35, 12),
    (1.5, 11),
    (1.75, 10),
    (2.0, 9),
    (2.5, 8),
    (3.0, 7),
    (4.0, 6),
    (5.0, 6),
    (6.5, 5),
    (8.0, 5),
    (12.0, 5),
    (20.0, 4),
    (30.0, 4),
    (50.0, 3),
    (80.0, 3),
    (150.0, 3),
    (300.0, 3),
)

# rho -> shift h, Taylor length kapn and convergents nu in R:
_H_SCHEDULE: Schedule = (
    (0.292, 1.7),
    (0.35, 1.7),
    (0.4, 1.7),
    (0.45, 1.7),
    (0.5, 1.6),
    (0.55, 1.5),
    (0.6, 1.4),
    (0.65, 1.4),
    (0.7, 1.3),
    (0.75, 1.1),
    (0.8, 1.0),
    (0.85, 0.9),
    (0.9, 0.6),
    (0.95, 0.2),
)

_KAPN_SCHEDULE: Schedule = (
    (0.292, 37),
    (0.35, 36),
    (0.4, 37),
    (0.45, 36),
    (0.5, 35),
    (0.55, 33),
    (0.6, 31),
    (0.65, 30),
    (0.7, 28),
    (0.75, 24),
    (0.8, 22),
    (0.85, 21),
    (0.9, 16),
    (0.95, 10),
)

_R_NU_SCHEDULE: Schedule = (
    (0.292, 38),
    (0.35, 39),
    (0.4, 38),
    (0.45, 37),
    (0.5, 37),
    (0.55, 36),
    (0.6, 35),
    (0.65, 31),
    (0.7, 29),
    (0.75, 28),
    (0.8, 26),
    (0.85, 22),
    (0.9, 21),
    (0.95, 17),
)


@dataclass(frozen=True)
class TuningParams:
    x0: float = 6.3
    y0: float = 4.4
    rho_inner: float = 0.292
    rho_outer: float = 1.0
    strip_x_min: float = 1.8396
    strip_x_max: float = 20.0
    strip_y_max: float = 0.031623
    # Taylor terms after the leading w(x) in the strip: degree of the polynomial in iy
    upward_terms: int = 7
    target_digits: int = 14
    series_tol: float = 1e-16
    nu_schedule: Schedule = _NU_SCHEDULE
    h_schedule: Schedule = _H_SCHEDULE
    kapn_schedule: Schedule = _KAPN_SCHEDULE
    r_nu_schedule: Schedule = _R_NU_SCHEDULE

    def __post_init__(self) -> None:
        if not 0.0 < self.rho_inner < self.rho_outer:
            raise ValueError("need 0 < rho_inner < rho_outer")
        if self.upward_terms < 1:
            raise ValueError("upward_terms must be positive")
        for name in ("nu_schedule", "h_schedule", "kapn_schedule", "r_nu_schedule"):
            knots = getattr(self, name)
            if not knots or any(a[0] >= b[0] for a, b in zip(knots, knots[1:])):
                raise ValueError(f"{name}: knots must be non-empty and strictly increasing")


DEFAULT_PARAMS = TuningParams()


def step_schedule(knots: Schedule, r: float) -> float:
    """Value of the last knot at or below ``r`` (the first knot's value below it).

    Each knot's value was calibrated to hold on the whole band up to the
    next knot, so no interpolation is done between them.
    """
    i = bisect.bisect_right([k[0] for k in knots], r)
    return float(knots[max(i - 1, 0)][1])


def rho(z: complex, p: TuningParams = DEFAULT_PARAMS) -> float:
    return math.hypot(abs(z.real) / p.x0, abs(z.imag) / p.y0)


def in_strip(x: float, y: float, p: TuningParams = DEFAULT_PARAMS) -> bool:
    """Strip test on first-quadrant coordinates; both bounds inclusive."""
    return p.strip_x_min <= x <= p.strip_x_max and y <= p.strip_y_max


def classify(z: complex, p: TuningParams = DEFAULT_PARAMS, remedy_enabled: bool = True) -> Region:
    x, y = abs(z.real), abs(z.imag)
    if remedy_enabled and in_strip(x, y, p):
        return Region.STRIP
    r = math.hypot(x / p.x0, y / p.y0)
    if r <= p.rho_inner:
        return Region.S
    if r < p.rho_outer:
        return Region.R
    return Region.Q


def nu_for(rho_val: float, p: TuningParams = DEFAULT_PARAMS) -> int:
    """Continued-fraction convergents for a point of region Q."""
    nu = int(step_schedule(p.nu_schedule, rho_val))
    return min(NU_MAX, max(NU_MIN, nu))


def downward_params(rho_val: float, p: TuningParams = DEFAULT_PARAMS) -> tuple[float, int, int]:
    """(h, kapn, nu) for the downward Taylor scheme at a point of region R."""
    h = step_schedule(p.h_schedule, rho_val)
    kapn = int(step_schedule(p.kapn_schedule, rho_val))
    nu = int(step_schedule(p.r_nu_schedule, rho_val))
    return h, kapn, max(nu, kapn + 1)
