"""Identities and structural properties that need no reference values."""

import cmath
import math

import gmpy2
from gmpy2 import mpc
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from faddeyeva.evaluator import exp_neg_sq, taylor_coeffs, w, w_cf, w_downward, w_powerseries, w_upward
from faddeyeva.regions import DEFAULT_PARAMS, Region, classify, downward_params, nu_for, rho

from conftest import comp_err

P = DEFAULT_PARAMS
coord = st.floats(min_value=0.0, max_value=40.0, allow_nan=False)
signed = st.floats(min_value=-25.0, max_value=25.0, allow_nan=False)


@given(coord, coord)
def test_conjugate_symmetry_bitwise(x, y):
    a = w(complex(x, y)).value
    b = w(complex(-x, y)).value
    assert b.real == a.real and b.imag == -a.imag


@settings(max_examples=300)
@given(signed, st.floats(min_value=-25.0, max_value=-1e-300))
def test_reflection(x, y):
    z = complex(x, y)
    r = w(z)
    assume(r.ok)
    b = w(-z).value
    rhs = 2 * cmath.exp(-z * z)
    assume(all(math.isfinite(c) for c in (rhs.real, rhs.imag)))
    assert abs(r.value + b - rhs) <= 1e-12 * max(abs(r.value), abs(b), abs(rhs))


@given(coord, coord)
def test_result_invariants(x, y):
    r = w(complex(x, y))
    assert r.terms_used >= 1
    assert math.isfinite(r.value.real) and math.isfinite(r.value.imag)
    assert r.region is classify(complex(x, y))
    if r.region is Region.STRIP:
        assert r.terms_used == P.upward_terms
    # w has positive real part in the closed upper half plane
    assert r.value.real >= 0


def _kernel(z, region):
    r = rho(z)
    if region is Region.S:
        return w_powerseries(z, P.series_tol)[0]
    if region is Region.R:
        return w_downward(z, *downward_params(r))
    if region is Region.Q:
        return w_cf(z, nu_for(max(r, 1.0)))
    return w_upward(z)


def _straddle(z_in, z_out, a, b):
    # both kernels at the same point, on either side of the seam
    return max(comp_err(_kernel(z, a), _kernel(z, b)) for z in (z_in, z_out))


def test_boundary_continuity_contours():
    d = 1e-12
    for k in range(1, 40):
        t = (math.pi / 2) * k / 40
        for r0, a, b in ((P.rho_inner, Region.S, Region.R), (P.rho_outer, Region.R, Region.Q)):
            c, s = math.cos(t), math.sin(t)
            zin = complex(P.x0 * r0 * c - d * c, P.y0 * r0 * s - d * s)
            zout = complex(P.x0 * r0 * c + d * c, P.y0 * r0 * s + d * s)
            if classify(zin) is a and classify(zout) is b:
                assert _straddle(zin, zout, a, b) <= 1e-11, (zin, a, b)


def test_boundary_continuity_strip_edges():
    d = 1e-12
    ys = [10.0 ** (-k) for k in range(2, 15)] + [P.strip_y_max]
    for y in ys:
        for xe, outside in ((P.strip_x_min, -d), (P.strip_x_max, d)):
            zs = complex(xe, y)
            zo = complex(xe + outside, y)
            reg = classify(zo)
            assert classify(zs) is Region.STRIP and reg is not Region.STRIP
            assert _straddle(zs, zo, Region.STRIP, reg) <= 1e-11, (zs, reg)
    for k in range(50):
        x = P.strip_x_min + (P.strip_x_max - P.strip_x_min) * k / 49
        zs, zo = complex(x, P.strip_y_max - d), complex(x, P.strip_y_max + d)
        reg = classify(zo)
        assert _straddle(zs, zo, Region.STRIP, reg) <= 1e-11, (zs, reg)


def test_coefficient_growth_bounded():
    y = P.strip_y_max
    for k in range(2001):
        x = 20.0 * k / 2000
        c = taylor_coeffs(x, P.upward_terms).c
        bound = abs(c[0]) + abs(c[1]) * y + 1
        for n in range(len(c)):
            assert abs(c[n]) * y**n <= bound, (x, n)


@given(st.floats(min_value=0.0, max_value=20.0))
def test_taylor_split_consistent(x):
    tc = taylor_coeffs(x, 7)
    assert len(tc) == 8
    # both parts obey the same three-term recurrence
    for seq in (tc.b, tc.d):
        for n in range(1, 7):
            want = -(2 / (n + 1)) * (x * seq[n] + seq[n - 1])
            assert abs(seq[n + 1] - want) <= 1e-15 * (abs(x * seq[n]) + abs(seq[n - 1])) + 1e-300


@given(st.floats(min_value=0.0, max_value=1.3), st.floats(min_value=0.0, max_value=2 * math.pi))
def test_powerseries_even_part_is_exp(r, t):
    # sum_k (iz)^{2k} / k! in extended precision against the closed form
    z = cmath.rect(r, t)
    with gmpy2.context(gmpy2.get_context(), precision=200):
        q = -mpc(z.real, z.imag) ** 2
        term, total = mpc(1), mpc(1)
        for k in range(1, 60):
            term = term * q / k
            total += term
        want = complex(float(total.real), float(total.imag))
    got = exp_neg_sq(z.real, z.imag)
    # ulps of |exp(-z^2)|: a component near a zero of cos or sin has no
    # relative accuracy to offer once -2xy is rounded
    ulp = math.ulp(abs(want))
    assert abs(got.real - want.real) <= 2 * ulp
    assert abs(got.imag - want.imag) <= 2 * ulp


@given(coord)
def test_real_axis_exact_exp(x):
    assume(x > 0)
    for remedy in (True, False):
        assert w(complex(x, 0.0), remedy_enabled=remedy).value.real == math.exp(-x * x)
