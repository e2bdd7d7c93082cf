"""Extended-precision reference values for w(z) and Dawson's integral.

Used by the tests, the calibration scripts and ``--engine=oracle``; the
double-precision evaluator never imports this module.

Arithmetic is MPFR via gmpy2.  The reference for w(z) integrates e^{v^2}
along the path 0 -> x -> x + iy::

    w(z) = e^{-z^2} (1 + 2i/sqrt(pi) (I1 + I2))
    I1 = int_0^x e^{t^2} dt              (positive-term series)
    I2 = i int_0^y e^{(x + is)^2} ds     (Clenshaw-Curtis, doubled until stable)

The cancellation between the bracket's terms grows like e^{y^2}, so the
working precision is raised accordingly, and every result is checked a
posteriori against a rounding-error bound before it is returned.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpc, mpfr

__all__ = [
    "DomainError",
    "PrecisionError",
    "UndefinedMetricError",
    "RefValue",
    "RelErr",
    "w_ref",
    "w_series_ref",
    "f_ref",
    "relerr",
    "format_sig",
    "parse_ref",
]

W_DOMAIN = 30.0
F_DOMAIN = 100.0
MIN_DIGITS = 20
MAX_DIGITS = 50

_GUARD_DIGITS = 8
_MAX_ATTEMPTS = 6
_MIN_NODES = 8
_MAX_NODES = 8192
_LOG2_10 = math.log2(10.0)


class DomainError(ValueError):
    """Argument outside the region where the reference is supported."""


class PrecisionError(ArithmeticError):
    """The requested number of digits could not be certified."""


class UndefinedMetricError(ArithmeticError):
    """Relative error requested against a zero reference."""


@dataclass(frozen=True)
class RefValue:
    re: mpfr
    im: mpfr
    digits_claimed: int

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


@dataclass(frozen=True)
class RelErr:
    re_rel: float
    im_rel: float
    mod_rel: float

    @property
    def worst(self) -> float:
        return max(self.re_rel, self.im_rel)


def _context(bits: int):
    return gmpy2.context(gmpy2.get_context(), precision=bits)


def _bits_for(digits: float) -> int:
    bits = int(math.ceil(digits * _LOG2_10)) + 16
    return -(-bits // 64) * 64


# ---------------------------------------------------------------------------
# Clenshaw-Curtis rules (nested: the 2N-point rule reuses the N-point nodes)
# ---------------------------------------------------------------------------

_rule_lock = threading.Lock()
_rule_master: dict[int, tuple[int, list, list]] = {}
_rule_rounded: dict[tuple[int, int], tuple[list, list]] = {}
# rules are built once at this precision (enough for y = 30) and rounded down
_RULE_BITS = 1600


def _build_rule(n: int, bits: int) -> tuple[list, list]:
    with _context(bits + 32):
        pi_n = gmpy2.const_pi() / n
        cos_table = [gmpy2.cos(m * pi_n) for m in range(2 * n)]
        half = n // 2
        coef = [mpfr(1 if j == half else 2) / (4 * j * j - 1) for j in range(1, half + 1)]
        nodes, weights = [], []
        for k in range(half + 1):
            acc = mpfr(1)
            for j, c_j in enumerate(coef, start=1):
                acc -= c_j * cos_table[(2 * j * k) % (2 * n)]
            weights.append((1 if k == 0 else 2) * acc / n)
            nodes.append(cos_table[k])
    return nodes, weights


def _cc_rule(n: int, bits: int) -> tuple[list, list]:
    """Nodes cos(k pi / n) and weights on [-1, 1] for k = 0..n/2 (n even)."""
    key = (n, bits)
    with _rule_lock:
        hit = _rule_rounded.get(key)
    if hit is not None:
        return hit
    with _rule_lock:
        master = _rule_master.get(n)
    if master is None or master[0] < bits:
        build_bits = max(bits, _RULE_BITS)
        nodes, weights = _build_rule(n, build_bits)
        master = (build_bits, nodes, weights)
        with _rule_lock:
            _rule_master[n] = master
    with _context(bits):
        rounded = ([+v for v in master[1]], [+v for v in master[2]])
    with _rule_lock:
        _rule_rounded[key] = rounded
    return rounded


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------


def _erfi_integral(x: mpfr, bits: int):
    """int_0^x e^{t^2} dt = x * sum x^{2n} / (n! (2n+1)); all terms positive."""
    if x == 0:
        return mpfr(0)
    x2 = x * x
    term = mpfr(1)
    total = mpfr(1)
    n = 0
    eps = mpfr(2) ** (-bits - 8)
    while True:
        n += 1
        term = term * x2 / n
        contrib = term / (2 * n + 1)
        total += contrib
        if n > x2 and contrib < eps * total:
            break
    return x * total


class _Integrand:
    """Samples of e^{-s^2} e^{2ixs} at s = (y/2)(1 + cos(k pi / n)), refined by doubling n."""

    def __init__(self, x: mpfr, y: mpfr, n: int, bits: int):
        self.x, self.half = x, y / 2
        self.n, self.bits = n, bits
        self.vals = [self._f(k, n) for k in range(n + 1)]

    def _f(self, k: int, n: int):
        nodes, _ = _cc_rule(n, self.bits)
        u = nodes[k] if 2 * k <= n else -nodes[n - k]
        s = self.half * (1 + u)
        mag = gmpy2.exp(-s * s)
        sn, cs = gmpy2.sin_cos(2 * self.x * s)
        return mag * cs, mag * sn

    def refine(self) -> None:
        n2 = 2 * self.n
        vals = [None] * (n2 + 1)
        vals[::2] = self.vals
        for k in range(1, n2, 2):
            vals[k] = self._f(k, n2)
        self.vals, self.n = vals, n2

    def integrate(self):
        n = self.n
        _, weights = _cc_rule(n, self.bits)
        re = mpfr(0)
        im = mpfr(0)
        for k, (fr, fi) in enumerate(self.vals):
            wt = weights[min(k, n - k)]
            re += wt * fr
            im += wt * fi
        return re * self.half, im * self.half


def _start_nodes(x: float, y: float, digits: float) -> int:
    # rough count for an entire integrand oscillating at rate 2x over a
    # Gaussian window of width y; the doubling loop corrects it either way
    est = 0.5 * (2.0 * x * y + y * y) + 0.35 * digits + 4
    n = _MIN_NODES
    while 2 * n <= est and 2 * n < _MAX_NODES:
        n *= 2
    return n


def _check_domain_w(z: complex, digits: int) -> tuple[float, float]:
    if not MIN_DIGITS <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}], got {digits}")
    x, y = float(z.real), float(z.imag)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"non-finite argument {z!r}")
    if not (0.0 <= x <= W_DOMAIN and 0.0 <= y <= W_DOMAIN):
        raise DomainError(f"w_ref supports 0 <= x, y <= {W_DOMAIN}; got {z!r}")
    return x, y


def _certified(value, err, digits: int) -> bool:
    return err <= abs(value) * mpfr(10) ** (-(digits + 1))


def _deficit(value, err, digits: int) -> float:
    if value == 0:
        return float("inf")
    return float(gmpy2.log10(err / abs(value))) + digits + 1


# ---------------------------------------------------------------------------
# public references
# ---------------------------------------------------------------------------


def w_ref(z: complex, digits: int = 25) -> RefValue:
    """Faddeyeva function on the first-quadrant square [0, 30]^2.

    Components are certified to ``digits`` significant digits each; a
    component that is identically zero (the imaginary part on the imaginary
    axis) is returned as an exact zero.
    """
    x, y = _check_domain_w(z, digits)
    if x == 0.0 and y == 0.0:
        return RefValue(mpfr(1), mpfr(0), digits)

    # digits lost to cancellation inside the bracket: e^{y^2} / |w|
    cancel = y * y / math.log(10.0) + math.log10(math.sqrt(math.pi) * math.hypot(x, y) + 2.0)
    extra = 0.0
    for _ in range(_MAX_ATTEMPTS):
        bits = _bits_for(digits + _GUARD_DIGITS + cancel + extra)
        with _context(bits):
            out = _w_path(x, y, digits, bits)
        if isinstance(out, RefValue):
            return out
        extra += out + 4
    raise PrecisionError(f"w_ref({z!r}) could not certify {digits} digits")


def _w_path(x: float, y: float, digits: int, bits: int):
    """One attempt at fixed precision; returns RefValue or the digit deficit."""
    X, Y = mpfr(x), mpfr(y)
    kappa = 2 / gmpy2.sqrt(gmpy2.const_pi())
    ex2 = gmpy2.exp(-X * X)
    dawson = ex2 * _erfi_integral(X, bits)
    unit = mpfr(2) ** -bits

    if y == 0.0:
        # w(x) = e^{-x^2} + i kappa F(x): no cancellation, no quadrature
        return RefValue(ex2, kappa * dawson, digits)

    samples = _Integrand(X, Y, _start_nodes(x, y, digits + y * y / math.log(10.0)), bits)
    prev = samples.integrate()
    while True:
        if samples.n >= _MAX_NODES:
            raise PrecisionError(f"quadrature did not converge at ({x}, {y})")
        samples.refine()
        k_re, k_im = samples.integrate()
        quad_err = abs(mpc(k_re - prev[0], k_im - prev[1]))
        prev = (k_re, k_im)

        # w = e^{y^2 - 2ixy} [ (e^{-x^2} - kappa K_re) + i kappa (F - K_im) ]
        inner_re = ex2 - kappa * k_re
        inner_im = kappa * (dawson - k_im)
        sn, cs = gmpy2.sin_cos(2 * X * Y)
        ey2 = gmpy2.exp(Y * Y)
        re = ey2 * (cs * inner_re + sn * inner_im)
        im = ey2 * (cs * inner_im - sn * inner_re)
        if x == 0.0:
            im = mpfr(0)

        # recursive summation over n nodes: rounding grows at most linearly in n
        scale = ex2 + kappa * (dawson + Y + abs(k_re) + abs(k_im))
        rounding_only = ey2 * unit * (4 * samples.n + 64) * scale
        err = rounding_only + ey2 * kappa * quad_err
        comps = [(re, err)] if x == 0.0 else [(re, err), (im, err)]
        if all(_certified(v, e, digits) for v, e in comps):
            return RefValue(re, im, digits)
        if not all(_certified(v, rounding_only * 4, digits) for v, _ in comps):
            return max(_deficit(v, rounding_only * 4, digits) for v, _ in comps)
        # rounding is fine; only the quadrature needs more nodes


def w_series_ref(z: complex, digits: int = 25) -> RefValue:
    """Second, independent reference: sum (iz)^n / Gamma(n/2 + 1) for |z| <= 4."""
    if not MIN_DIGITS <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}], got {digits}")
    x, y = float(z.real), float(z.imag)
    if not (math.isfinite(x) and math.isfinite(y)) or math.hypot(x, y) > 4.0:
        raise DomainError(f"w_series_ref supports |z| <= 4; got {z!r}")
    r2 = x * x + y * y
    extra = 0.0
    for _ in range(_MAX_ATTEMPTS):
        bits = _bits_for(digits + 10 + r2 / math.log(10.0) + extra)
        with _context(bits):
            Z = mpc(mpfr(x), mpfr(y))
            q = -Z * Z
            even = mpc(1)
            odd = 2 * mpc(0, 1) * Z / gmpy2.sqrt(gmpy2.const_pi())
            total = even + odd
            bound = abs(even) + abs(odd)
            eps = mpfr(2) ** (-bits - 8)
            k = 0
            while True:
                k += 1
                even = even * q / k
                odd = odd * q / (k + mpfr(0.5))
                total += even + odd
                mag = abs(even) + abs(odd)
                bound += mag
                if k > r2 and mag < eps * abs(total):
                    break
            err = bound * mpfr(2) ** -bits * (4 * k + 64)
            re, im = total.real, total.imag
            comps = [re, im]
            if x == 0.0:
                im = mpfr(0)
                comps = [re]
            if all(_certified(v, err, digits) for v in comps):
                return RefValue(re, im, digits)
            extra += max(_deficit(v, err, digits) for v in comps) + 4
    raise PrecisionError(f"w_series_ref({z!r}) could not certify {digits} digits")


def f_ref(x: float, digits: int = 25) -> mpfr:
    """Dawson's integral F(x) = e^{-x^2} int_0^x e^{t^2} dt for 0 <= x <= 100."""
    if not MIN_DIGITS <= digits <= MAX_DIGITS:
        raise DomainError(f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}], got {digits}")
    x = float(x)
    if not (math.isfinite(x) and 0.0 <= x <= F_DOMAIN):
        raise DomainError(f"f_ref supports 0 <= x <= {F_DOMAIN}; got {x!r}")
    if x == 0.0:
        return mpfr(0)
    # positive series: relative error grows only with the term count (~e x^2)
    bits = _bits_for(digits + _GUARD_DIGITS + math.log10(3.0 * x * x + 10.0))
    with _context(bits):
        X = mpfr(x)
        return gmpy2.exp(-X * X) * _erfi_integral(X, bits)


# ---------------------------------------------------------------------------
# metrics and text formats
# ---------------------------------------------------------------------------

_METRIC_BITS = 160
_GUARD_FLOOR = 1e-300


def relerr(approx: complex, ref: RefValue) -> RelErr:
    """Componentwise and modulus relative error of ``approx`` against ``ref``.

    A reference component smaller than 1e-300 times |ref| is compared by
    absolute error scaled by |ref| instead.
    """
    with _context(_METRIC_BITS):
        rr, ri = mpfr(ref.re), mpfr(ref.im)
        mod = gmpy2.sqrt(rr * rr + ri * ri)
        if mod == 0:
            raise UndefinedMetricError("reference value is zero")
        dr = abs(mpfr(approx.real) - rr)
        di = abs(mpfr(approx.imag) - ri)
        floor = mod * mpfr(_GUARD_FLOOR)
        re_rel = dr / abs(rr) if abs(rr) >= floor else dr / mod
        im_rel = di / abs(ri) if abs(ri) >= floor else di / mod
        mod_rel = gmpy2.sqrt(dr * dr + di * di) / mod
        return RelErr(float(re_rel), float(im_rel), float(mod_rel))


def format_sig(v, sig: int = 25) -> str:
    """Scientific notation with ``sig`` significant digits."""
    v = mpfr(v) if not isinstance(v, type(mpfr(0))) else v
    if v == 0:
        return "0." + "0" * (sig - 1) + "e+00"
    digits, exp, _ = gmpy2.digits(v, 10, sig)
    sign = ""
    if digits.startswith("-"):
        sign, digits = "-", digits[1:]
    return f"{sign}{digits[0]}.{digits[1:]}e{exp - 1:+03d}"


def parse_ref(re: str, im: str, digits_claimed: int = 25) -> RefValue:
    with _context(_METRIC_BITS):
        return RefValue(mpfr(re), mpfr(im), digits_claimed)
