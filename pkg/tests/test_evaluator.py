import cmath
import math

import gmpy2
import pytest
from gmpy2 import mpc

from faddeyeva.errors import InvalidArgumentError
from faddeyeva.evaluator import (
    TWO_OVER_SQRT_PI,
    EvalResult,
    Status,
    extend_full_plane,
    taylor_coeffs,
    w,
    w_cf,
    w_downward,
    w_powerseries,
    w_real_axis,
    w_upward,
)
from faddeyeva.oracle import w_ref
from faddeyeva.regions import DEFAULT_PARAMS, Region

from conftest import comp_err

SQRT_PI = math.sqrt(math.pi)


def ref(z, digits=25):
    return w_ref(z, digits).to_complex()


def test_w_examples():
    r = w(0j)
    assert r.value == 1 + 0j and r.region is Region.S and r.status is Status.OK
    assert comp_err(w(1).value, complex(0.36787944117144233, 0.6071577058413937)) < 1e-15
    assert comp_err(w(1j).value, complex(0.4275835761558070, 0)) < 1e-14
    assert w(1j).value.imag == 0.0


def test_overflow_status():
    r = w(-30j)
    assert r.status is Status.OVERFLOW and not r.ok
    assert r.value.real == math.inf
    assert r.value.imag == 0.0
    r = w(complex(3, -27))
    assert r.status is Status.OVERFLOW
    assert all(math.isinf(c) for c in (r.value.real, r.value.imag))


def test_nan_and_inf_rejected():
    for z in (complex(math.nan, 1), complex(1, math.nan), complex(math.inf, 0)):
        with pytest.raises(InvalidArgumentError):
            w(z)


def test_negative_zero_is_plain_zero():
    assert w(complex(-0.0, -0.0)).value == w(0j).value
    assert w(complex(2.0, -0.0)).value == w(complex(2.0, 0.0)).value
    assert w(complex(2.0, -0.0)).status is Status.OK


def test_extend_full_plane():
    w1 = w(1).value
    v, st = extend_full_plane(complex(-1, 0), w1)
    assert v == w1.conjugate() and st is Status.OK
    assert extend_full_plane(2 + 3j, 5 + 7j) == (5 + 7j, Status.OK)
    assert comp_err(w(-1).value, complex(0.36787944117144233, -0.6071577058413937)) < 1e-15


def test_reflection_against_complex_exp():
    for z in (2 - 1j, -3 - 2j, 0.5 - 0.1j, -7 - 0.01j, 4 - 5j):
        a, b = w(z).value, w(-z).value
        rhs = 2 * cmath.exp(-z * z)
        # measured against the operands: near the axis w(z) ~ -w(-z) and the sum cancels
        assert abs(a + b - rhs) <= 1e-12 * max(abs(a), abs(b), abs(rhs))


def test_powerseries_examples():
    assert w_powerseries(0j) == (1 + 0j, 1)
    v, _ = w_powerseries(0.5j)
    assert v.real == pytest.approx(0.6156903441929259, rel=1e-15)
    v, _ = w_powerseries(0.1 + 0j)
    assert v == pytest.approx(complex(0.99004983374916811, TWO_OVER_SQRT_PI * 0.0993359923978529), rel=1e-14)


def test_powerseries_even_part_is_exp():
    # the closed form used for the even terms, against cmath, to 2 ulp
    for k in range(60):
        z = 1.3 * cmath.rect(k / 60, 2 * math.pi * k / 61)
        x, y = z.real, z.imag
        q = complex((y - x) * (y + x), -2 * x * y)
        even = complex(math.exp(q.real) * math.cos(q.imag), math.exp(q.real) * math.sin(q.imag))
        want = cmath.exp(-z * z)
        assert abs(even - want) <= 2 * 2.3e-16 * abs(want) + 1e-300


def test_cf_examples():
    assert w_cf(100j, 1) == pytest.approx(complex(1 / (100 * SQRT_PI), 0), rel=1e-15)
    # (1/(100 sqrt(pi))) (1 - 1/(2 10^4) + 3/(4 10^8)) = 0.0056416138...
    exact = (1 - 1 / 2e4 + 3 / 4e8) / (100 * SQRT_PI)
    assert w_cf(100j, 3).real == pytest.approx(exact, rel=1e-6)


def test_cf_convergents_improve_far_field():
    # w(100i) = e^{10^4} erfc(100); outside the oracle square, so use the
    # asymptotic series (truncation far below the differences compared)
    y = 100.0
    s, t = 0.0, 1.0
    for k in range(8):
        s += t
        t *= -(2 * k + 1) / (2 * y * y)
    exact = s / (y * SQRT_PI)
    errs = [abs(w_cf(100j, nu).real - exact) for nu in (1, 2, 3)]
    assert errs[0] >= errs[1] >= errs[2]


def test_cf_at_cf_validity_edge():
    z = complex(20, 1e-10)
    assert comp_err(w_cf(z, 16), ref(z)) <= 1e-13


def test_downward_reduces_to_cf():
    for z in (3 + 2j, 1 + 3j, 10 + 0.5j):
        assert w_downward(z, 0.0, 0, 12) == pytest.approx(w_cf(z, 12), rel=1e-15)


def test_downward_rejects_bad_params():
    with pytest.raises(InvalidArgumentError):
        w_downward(1 + 1j, 1.0, 10, 10)
    with pytest.raises(InvalidArgumentError):
        w_downward(1 + 1j, 0.0, 3, 10)


@pytest.mark.parametrize("z", [3 + 2j, 1 + 3j])
def test_downward_against_oracle(z):
    r = w(z)
    assert r.region is Region.R
    assert comp_err(r.value, ref(z)) <= 1e-12


def test_downward_real_axis_uses_exp():
    v = w(complex(4.0, 0.0), remedy_enabled=False)
    assert v.region is Region.R
    assert v.value.real == math.exp(-16.0)


def test_real_axis():
    assert w_real_axis(0.0) == 1 + 0j
    v = w_real_axis(1.0)
    assert v == pytest.approx(complex(0.36787944117144233, 0.6071577058413937), rel=1e-15)
    v = w_real_axis(20.0)
    assert v.real == math.exp(-400.0)
    assert v.imag == pytest.approx(TWO_OVER_SQRT_PI / 40 * (1 + 1 / 800 + 3 / 800**2 + 15 / 800**3), rel=1e-9)
    assert w_real_axis(30.0).real == 0.0


def test_taylor_coeffs_at_zero():
    tc = taylor_coeffs(0.0, 3)
    assert tc.d == (0.0, 1.0, 0.0, -2.0 / 3.0)
    c = tc.c
    assert c[0] == 1 and c[1] == TWO_OVER_SQRT_PI * 1j and c[2] == -1
    assert c[3] == pytest.approx(-2 / (3 * SQRT_PI) * 2j, rel=1e-15)


def test_taylor_coeffs_at_one():
    d = taylor_coeffs(1.0, 7).d
    assert d[0] == pytest.approx(0.5380795069127684, rel=1e-15)
    assert d[1] == pytest.approx(1 - 2 * d[0], rel=1e-14)
    assert d[1] == pytest.approx(-0.07615901382553687, rel=1e-13)
    assert d[2] == pytest.approx(-0.46192049, rel=1e-7)
    # d_2 = F''/2 = -(F + x F')
    assert d[2] == pytest.approx(-(d[0] + d[1]), rel=1e-14)


def test_taylor_coeffs_split_matches_complex_recurrence():
    tc = taylor_coeffs(3.0, 7)
    c = list(tc.c)
    for n in range(1, 7):
        want = -(2 / (n + 1)) * (3.0 * c[n] + c[n - 1])
        assert abs(c[n + 1] - want) <= 1e-14 * (abs(c[n]) + abs(c[n - 1]))


def test_taylor_c1_finite_difference():
    # c_1 = w'(x); central difference in the imaginary direction via the oracle
    h = 1e-6
    for x in (2.0, 6.3, 11.0, 19.5):
        plus = w_ref(complex(x, h), 40)
        # w(x - ih) from the reflection identity, in extended precision
        with gmpy2.context(gmpy2.get_context(), precision=200):
            z = mpc(x, -h)
            wm = 2 * gmpy2.exp(-z * z) - mpc(plus.re, -plus.im)
            fd = (mpc(plus.re, plus.im) - wm) / mpc(0, 2 * h)
            fd = complex(float(fd.real), float(fd.imag))
        c1 = taylor_coeffs(x, 1).c[1]
        assert abs(c1 - fd) <= 1e-8 * abs(fd)


def test_upward_examples():
    for x in (1.8396, 6.3, 20.0):
        assert w_upward(complex(x, 0.0)) == w_real_axis(x)
    for z in (6.3 + 0.01j, 1.8396 + 0.031623j):
        assert comp_err(w_upward(z), ref(z)) <= 5e-13


def test_strip_result_reports_upward_terms():
    r = w(6.3 + 1e-6j)
    assert r.region is Region.STRIP
    assert r.terms_used == DEFAULT_PARAMS.upward_terms == 7


def test_eval_result_is_frozen():
    r = w(1 + 1j)
    assert isinstance(r, EvalResult)
    with pytest.raises(Exception):
        r.terms_used = 0
