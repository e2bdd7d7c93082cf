"""Rectangular sample grids shared by the CLI and the fixture scripts."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError

SCALES = ("linear", "log")


def axis(lo: float, hi: float, n: int, scale: str = "linear") -> list[float]:
    """n points from lo to hi inclusive; the endpoints are exact."""
    if n < 2:
        raise InvalidArgumentError("a grid axis needs at least 2 points")
    if not lo < hi:
        raise InvalidArgumentError(f"need min < max, got {lo} >= {hi}")
    if scale == "linear":
        pts = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    elif scale == "log":
        if lo <= 0:
            raise InvalidArgumentError("log scale needs min > 0")
        a, b = math.log10(lo), math.log10(hi)
        pts = [10.0 ** (a + (b - a) * i / (n - 1)) for i in range(n)]
    else:
        raise InvalidArgumentError(f"unknown scale {scale!r}")
    pts[0], pts[-1] = lo, hi
    return pts


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    x_points: int
    y_min: float
    y_max: float
    y_points: int
    x_scale: str = "linear"
    y_scale: str = "linear"

    def __post_init__(self) -> None:
        # validate eagerly so a bad spec fails before any work is done
        self.xs()
        self.ys()

    def xs(self) -> list[float]:
        return axis(self.x_min, self.x_max, self.x_points, self.x_scale)

    def ys(self) -> list[float]:
        return axis(self.y_min, self.y_max, self.y_points, self.y_scale)

    def points(self) -> list[tuple[float, float]]:
        """x-major order: all y for the first x, then the next x."""
        ys = self.ys()
        return [(x, y) for x in self.xs() for y in ys]


# the near-axis accuracy sweep: 200 x 50 over the remedy strip
STRIP_GRID = GridSpec(1.8396, 20.0, 200, 1e-20, 0.031623, 50, "linear", "log")
