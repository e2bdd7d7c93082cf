import csv
import math
from pathlib import Path

import gmpy2
import pytest
from gmpy2 import mpfr

FIXTURES = Path(__file__).parent / "fixtures"


def load_w_table(name):
    """[(x, y, re_str, im_str)] from a committed oracle table."""
    with (FIXTURES / name).open(newline="") as fh:
        return [(float(r["x"]), float(r["y"]), r["re_ref"], r["im_ref"]) for r in csv.DictReader(fh)]


def comp_err(a, r):
    """Worst componentwise relative error of complex a against complex r (doubles).

    Same guard as oracle.relerr: a component below 1e-300 |r| is compared
    absolutely, scaled by |r|.
    """
    mod = abs(r)
    floor = 1e-300 * mod
    er = abs(a.real - r.real) / (abs(r.real) if abs(r.real) >= floor else mod)
    ei = abs(a.imag - r.imag) / (abs(r.imag) if abs(r.imag) >= floor else mod)
    return max(er, ei)


def agree_digits(a, b):
    """Decimal digits to which two extended-precision values agree (inf if equal)."""
    with gmpy2.context(gmpy2.get_context(), precision=400):
        a, b = mpfr(a), mpfr(b)
        if a == b:
            return math.inf
        return float(-gmpy2.log10(abs(a - b) / max(abs(a), abs(b))))


@pytest.fixture(scope="session")
def strip_table():
    return load_w_table("strip_ref.csv")


@pytest.fixture(scope="session")
def global_table():
    return load_w_table("global_ref.csv")


@pytest.fixture(scope="session")
def dawson_table():
    with (FIXTURES / "dawson_ref.csv").open(newline="") as fh:
        return [(float(r["x"]), r["f_ref"]) for r in csv.DictReader(fh)]
