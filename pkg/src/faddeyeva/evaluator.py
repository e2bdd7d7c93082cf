"""Double-precision evaluation of the Faddeyeva function w(z) = exp(-z^2) erfc(-iz).

The first quadrant is split by :func:`faddeyeva.regions.classify` and each
part has its own kernel:

    S            power series (even part in closed form as exp(-z^2))
    R            Gautschi's shifted continued fraction with downward Taylor resummation
    Q            Laplace continued fraction
    RemedyStrip  Taylor expansion about the real point x, in powers of iy

The other quadrants follow from w(-conj z) = conj w(z) and
w(-z) = 2 exp(-z^2) - w(z).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dawson import dawson, dawson_with_deriv
from .errors import InvalidArgumentError
from .regions import DEFAULT_PARAMS, Region, TuningParams, classify, downward_params, nu_for

__all__ = [
    "Status",
    "EvalResult",
    "TaylorCoeffs",
    "w",
    "w_value",
    "extend_full_plane",
    "w_powerseries",
    "w_cf",
    "w_downward",
    "w_real_axis",
    "taylor_coeffs",
    "w_upward",
]

TWO_OVER_SQRT_PI = 1.1283791670955126  # 2/sqrt(pi)

# Cody-Waite split of ln 2 (fdlibm); k * LN2_HI is exact for |k| < 2^11
_LN2_HI = 6.93147180369123816490e-01
_LN2_LO = 1.90821492927058770002e-10
_INV_LN2 = 1.44269504088896338700e00


class Status(str, enum.Enum):
    OK = "ok"
    OVERFLOW = "overflow"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EvalResult:
    value: complex
    region: Region
    terms_used: int
    status: Status = Status.OK

    @property
    def ok(self) -> bool:
        return self.status is Status.OK


@dataclass(frozen=True)
class TaylorCoeffs:
    """Coefficients c_n = w^(n)(x)/n! split as c_n = b_n + (2/sqrt(pi)) i d_n.

    b_n belongs to exp(-z^2) and d_n = F^(n)(x)/n! to Dawson's integral.
    """

    x: float
    b: tuple[float, ...]
    d: tuple[float, ...]

    @property
    def c(self) -> tuple[complex, ...]:
        return tuple(complex(bn, TWO_OVER_SQRT_PI * dn) for bn, dn in zip(self.b, self.d))

    def __len__(self) -> int:
        return len(self.b)


def _check_finite(z: complex) -> None:
    if math.isnan(z.real) or math.isnan(z.imag):
        raise InvalidArgumentError(f"NaN argument: {z!r}")
    if math.isinf(z.real) or math.isinf(z.imag):
        raise InvalidArgumentError(f"non-finite argument: {z!r}")


# ---------------------------------------------------------------- kernels


def w_real_axis(x: float) -> complex:
    """w(x) = exp(-x^2) + (2/sqrt(pi)) i F(x) for real x >= 0."""
    return complex(math.exp(-x * x), TWO_OVER_SQRT_PI * dawson(x))


def _neg_sq(x: float, y: float) -> complex:
    # -z^2, with x^2 - y^2 formed without cancellation
    return complex((y - x) * (y + x), -2.0 * x * y)


def exp_neg_sq(x: float, y: float) -> complex:
    """exp(-z^2): the even terms of the small-|z| series in closed form."""
    q = _neg_sq(x, y)
    m = math.exp(q.real)
    return complex(m * math.cos(q.imag), m * math.sin(q.imag))


def w_powerseries(z: complex, tol: float = 1e-16) -> tuple[complex, int]:
    """Series sum_n (iz)^n / Gamma(n/2 + 1), for small |z|.

    The even terms sum to exp(-z^2) and are taken in closed form; the odd
    terms are iz * sum_k (-z^2)^k / Gamma(k + 3/2).  Returns the value and
    the number of odd terms used.
    """
    x, y = z.real, z.imag
    q = _neg_sq(x, y)
    term = complex(TWO_OVER_SQRT_PI)
    total = term
    k = 0
    while True:
        k += 1
        term *= q / (k + 0.5)
        if abs(term) < tol * abs(total):
            break
        total += term
    odd = complex(-y, x) * total
    return exp_neg_sq(x, y) + odd, k


def w_cf(z: complex, nu: int) -> complex:
    """nu-th convergent of the Laplace continued fraction, for Im z >= 0."""
    if nu < 1:
        raise InvalidArgumentError("nu must be >= 1")
    t = complex(z.imag, -z.real)  # -iz
    r = 0j
    for n in range(nu - 1, -1, -1):
        r = 0.5 / (t + (n + 1) * r)
    return TWO_OVER_SQRT_PI * r


def w_downward(z: complex, h: float, kapn: int, nu: int) -> complex:
    """Gautschi's scheme: continued fraction at z + ih, summed back down to z.

    The convergents r_n of the fraction shifted by h estimate the Taylor
    coefficients of w about z + ih; the first kapn + 1 of them are combined
    with powers of 2h by a Horner-like recursion.  h = 0 and kapn = 0 reduce
    to :func:`w_cf`.
    """
    if not 0 <= kapn < nu:
        raise InvalidArgumentError(f"need 0 <= kapn < nu, got kapn={kapn} nu={nu}")
    if h < 0.0 or (h == 0.0 and kapn > 0):
        raise InvalidArgumentError("need h > 0 (or h = 0 with kapn = 0)")
    x, y = z.real, z.imag
    h2 = 2.0 * h
    lam = h2**kapn
    tx0 = y + h
    rx = ry = sx = sy = 0.0
    for n in range(nu - 1, -1, -1):
        np1 = n + 1
        tx = tx0 + np1 * rx
        ty = x - np1 * ry
        c = 0.5 / (tx * tx + ty * ty)
        rx, ry = c * tx, c * ty
        if n <= kapn:
            tx = lam + sx
            sx, sy = rx * tx - ry * sy, ry * tx + rx * sy
            if n:
                lam /= h2
    re, im = TWO_OVER_SQRT_PI * sx, TWO_OVER_SQRT_PI * sy
    if y == 0.0:
        re = math.exp(-x * x)
    return complex(re, im)


def _dawson_pair(x: float, n: int) -> tuple[list[float], list[float]]:
    """b_0..b_n and d_0..d_n about the real point x."""
    b0 = math.exp(-x * x)
    b = [b0, -2.0 * x * b0]
    d = list(dawson_with_deriv(x))
    for k in range(1, n):
        f = -2.0 / (k + 1)
        b.append(f * (x * b[k] + b[k - 1]))
        d.append(f * (x * d[k] + d[k - 1]))
    return b[: n + 1], d[: n + 1]


def taylor_coeffs(x: float, n: int) -> TaylorCoeffs:
    """Taylor coefficients c_0..c_n of w about the real point x.

    Both components obey c_{k+1} = -(2/(k+1)) (x c_k + c_{k-1}).  d_1 is
    taken from F'(x) directly rather than 1 - 2x F(x), which cancels for
    large x.
    """
    if n < 1:
        raise InvalidArgumentError("need n >= 1")
    b, d = _dawson_pair(x, n)
    return TaylorCoeffs(x, tuple(b), tuple(d))


def _upward_sum(x: float, y: float, n: int) -> complex:
    # sum_k c_k (iy)^k with c_k = b_k + i k2 d_k.  With t = -y^2 the even
    # and odd powers of iy become real series in t:
    #   Re = E_b(t) - k2 y O_d(t),   Im = k2 E_d(t) + y O_b(t)
    # accumulated while the recurrence runs, so no coefficient list is built.
    f, fp = dawson_with_deriv(x)
    b0 = math.exp(-x * x)
    bp, b = b0, -2.0 * x * b0
    dp, d = f, fp
    t = -y * y
    eb, ed, ob, od = b0, f, b, d
    pw = 1.0
    # two degrees per pass: k + 1 is even, k + 2 odd, both weighted by t^j
    for k in range(1, n - 1, 2):
        s = -2.0 / (k + 1)
        bp, b = b, s * (x * b + bp)
        dp, d = d, s * (x * d + dp)
        pw *= t
        eb += b * pw
        ed += d * pw
        s = -2.0 / (k + 2)
        bp, b = b, s * (x * b + bp)
        dp, d = d, s * (x * d + dp)
        ob += b * pw
        od += d * pw
    if n % 2 == 0:
        s = -2.0 / n
        b = s * (x * b + bp)
        d = s * (x * d + dp)
        pw *= t
        eb += b * pw
        ed += d * pw
    k2 = TWO_OVER_SQRT_PI
    return complex(eb - k2 * y * od, k2 * ed + y * ob)


def w_upward(z: complex, p: TuningParams = DEFAULT_PARAMS) -> complex:
    """Strip kernel: Taylor polynomial about x of degree ``p.upward_terms`` in iy.

    The leading coefficient is w(x) itself; ``upward_terms`` counts the
    correction terms after it.
    """
    return _upward_sum(z.real, z.imag, p.upward_terms)


# ------------------------------------------------------------ full plane


def _two_exp(a: float, b: float) -> tuple[float, float]:
    """2 exp(a + ib) as (re, im), returning signed infinities on overflow."""
    c, s = math.cos(b), math.sin(b)
    if a < 700.0:
        m = 2.0 * math.exp(a)
        return m * c, m * s
    k = int(a * _INV_LN2 + 0.5)
    r = (a - k * _LN2_HI) - k * _LN2_LO
    m = 2.0 * math.exp(r)
    out = []
    for f in (c, s):
        if f == 0.0:
            out.append(0.0)
            continue
        try:
            out.append(math.ldexp(m * f, k))
        except OverflowError:
            out.append(math.copysign(math.inf, f))
    return out[0], out[1]


def extend_full_plane(z: complex, wq: complex) -> tuple[complex, Status]:
    """Map w(|x| + i|y|) to w(z)."""
    x, y = z.real, z.imag
    if y >= 0.0:
        return (wq.conjugate() if x < 0.0 else wq), Status.OK
    v = wq if x <= 0.0 else wq.conjugate()  # w(-z)
    ax, ay = abs(x), abs(y)
    er, ei = _two_exp((ay - ax) * (ay + ax), -2.0 * x * y)
    value = complex(er - v.real, ei - v.imag)
    if math.isinf(er) or math.isinf(ei):
        return value, Status.OVERFLOW
    return value, Status.OK


# ------------------------------------------------------------- dispatcher


def _first_quadrant(x: float, y: float, p: TuningParams, remedy: bool) -> tuple[complex, Region, int]:
    z = complex(x, y)
    region = classify(z, p, remedy)
    if region is Region.STRIP:
        return _upward_sum(x, y, p.upward_terms), region, p.upward_terms
    r = math.hypot(x / p.x0, y / p.y0)
    if region is Region.S:
        val, k = w_powerseries(z, p.series_tol)
        return val, region, k
    if region is Region.R:
        h, kapn, nu = downward_params(r, p)
        return w_downward(z, h, kapn, nu), region, nu
    nu = nu_for(r, p)
    val = w_cf(z, nu)
    if y == 0.0:
        val = complex(math.exp(-x * x), val.imag)
    return val, region, nu


def w(z: complex, p: TuningParams = DEFAULT_PARAMS, remedy_enabled: bool = True) -> EvalResult:
    """Evaluate w(z) anywhere in the finite complex plane."""
    z = complex(z)
    _check_finite(z)
    wq, region, terms = _first_quadrant(abs(z.real), abs(z.imag), p, remedy_enabled)
    value, status = extend_full_plane(z, wq)
    return EvalResult(value, region, terms, status)


def w_value(z: complex, remedy_enabled: bool = True) -> complex:
    """Just the value of w(z) with default tuning."""
    return w(z, DEFAULT_PARAMS, remedy_enabled).value
