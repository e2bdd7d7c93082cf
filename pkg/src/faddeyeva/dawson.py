"""Dawson's integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt for real x.

Branches on |x|, with the sign applied afterwards so that
``dawson(-x) == -dawson(x)`` holds bit for bit:

* |x| < 0.5: Maclaurin series x * sum (-2x^2)^k / (2k+1)!!
* 0.5 <= |x| < 7: piecewise polynomials for F, intervals of width 1/4
* 7 <= |x| < 20: piecewise polynomials for 2x F - 1, intervals of width 1/2
* |x| >= 20: asymptotic series (1/2x) * sum (2k-1)!! / (2x^2)^k

The polynomial tables come from scripts/fit_dawson.py.  Past 7 the tail
2x F - 1 is what gets approximated, so F'(x) = -(2x F - 1) is available
without cancellation.  At 20 the asymptotic series' smallest term is
~e^{-400}, so its truncation is far below double rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import _dawson_coeffs as _tab
from .errors import InvalidArgumentError

__all__ = ["DawsonMethod", "DawsonResult", "dawson", "dawson_eval", "dawson_deriv", "dawson_with_deriv"]

SERIES_MAX = _tab.MID_LO
TAIL_MIN = _tab.MID_HI
ASYMPTOTIC_MIN = _tab.TAIL_HI
_STOP = 1e-17


class DawsonMethod(enum.Enum):
    MACLAURIN = "maclaurin"
    CHEBYSHEV = "chebyshev_mid"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class DawsonResult:
    value: float
    method: DawsonMethod


def _maclaurin(x: float) -> float:
    q = -2.0 * x * x
    term = 1.0
    total = 1.0
    k = 0
    while True:
        k += 1
        term *= q / (2 * k + 1)
        total += term
        if abs(term) < _STOP * total:
            return x * total


def _piece(table, lo: float, scale: float, x: float) -> float:
    # interval widths are powers of two, so t is exact
    i = int((x - lo) * scale)
    t = ((x - lo) * scale - i) * 2.0 - 1.0
    acc = 0.0
    for c in table[i]:
        acc = acc * t + c
    return acc


def _asymptotic_tail(x: float) -> float:
    """sum_{k>=1} (2k-1)!! / (2x^2)^k, i.e. 2x F(x) - 1."""
    inv = 0.5 / (x * x)
    term = inv
    total = 0.0
    k = 1
    while True:
        total += term
        nxt = term * (2 * k + 1) * inv
        if nxt < _STOP * total or nxt >= term:
            return total
        term = nxt
        k += 1


def _check(x: float) -> None:
    if math.isnan(x):
        raise InvalidArgumentError("dawson: NaN argument")


def _core(ax: float) -> tuple[float, DawsonMethod]:
    if ax < SERIES_MAX:
        return _maclaurin(ax), DawsonMethod.MACLAURIN
    if ax < TAIL_MIN:
        return _piece(_tab.MID, SERIES_MAX, _tab.MID_SCALE, ax), DawsonMethod.CHEBYSHEV
    if ax < ASYMPTOTIC_MIN:
        tail = _piece(_tab.TAIL, TAIL_MIN, _tab.TAIL_SCALE, ax)
        return (1.0 + tail) / (2.0 * ax), DawsonMethod.CHEBYSHEV
    if math.isinf(ax):
        return 0.0, DawsonMethod.ASYMPTOTIC
    return (1.0 + _asymptotic_tail(ax)) / (2.0 * ax), DawsonMethod.ASYMPTOTIC


def dawson_eval(x: float) -> DawsonResult:
    _check(x)
    v, method = _core(abs(x))
    return DawsonResult(math.copysign(v, x), method)


def dawson(x: float) -> float:
    """Dawson's integral of a finite real argument."""
    _check(x)
    return math.copysign(_core(abs(x))[0], x)


def dawson_with_deriv(x: float) -> tuple[float, float]:
    """(F(x), F'(x)) from a single evaluation.

    F'(x) = 1 - 2x F(x).  From |x| >= 7 on the difference is known directly
    as minus the tail; forming it would cancel ~log10(2x^2) digits.
    """
    _check(x)
    ax = abs(x)
    if ax < TAIL_MIN:
        f = _piece(_tab.MID, SERIES_MAX, _tab.MID_SCALE, ax) if ax >= SERIES_MAX else _maclaurin(ax)
        f = math.copysign(f, x)
        return f, 1.0 - 2.0 * x * f
    if math.isinf(ax):
        return math.copysign(0.0, x), 0.0
    if ax < ASYMPTOTIC_MIN:
        tail = _piece(_tab.TAIL, TAIL_MIN, _tab.TAIL_SCALE, ax)
    else:
        tail = _asymptotic_tail(ax)
    return math.copysign((1.0 + tail) / (2.0 * ax), x), -tail


def dawson_deriv(x: float) -> float:
    """F'(x) = 1 - 2x F(x), see :func:`dawson_with_deriv`."""
    return dawson_with_deriv(x)[1]
