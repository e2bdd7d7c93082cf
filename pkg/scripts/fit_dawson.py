"""Fit the piecewise Dawson polynomials against the extended-precision reference.

Two ranges, each cut into equal intervals so the evaluator finds its piece
by one multiply:

    MID   F(x)            on [0.5, 7),  width 1/4
    TAIL  2x F(x) - 1     on [7, 20),   width 1/2

The tail form keeps F'(x) = -(2x F - 1) free of cancellation for large x.
On each interval the function is expanded in Chebyshev polynomials of
t = (2x - a - b)/(b - a) at 160 bits, truncated once the remaining
coefficients fall below TRUNCATE relative to the smallest value on the
interval, and converted to monomials in t for Horner evaluation.  The
narrow intervals keep that conversion well conditioned.  The result is
written to src/faddeyeva/_dawson_coeffs.py as exact decimal literals.

    python scripts/fit_dawson.py [--check]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import gmpy2
from gmpy2 import mpfr

from faddeyeva.oracle import _erfi_integral

RANGES = {
    "MID": (0.5, 7.0, 0.25),
    "TAIL": (7.0, 20.0, 0.5),
}
NODES = 40
TRUNCATE = 2e-18
BITS = 160
OUT = Path(__file__).resolve().parents[1] / "src" / "faddeyeva" / "_dawson_coeffs.py"


def _target(name: str, x: mpfr) -> mpfr:
    f = gmpy2.exp(-x * x) * _erfi_integral(x, BITS)
    return f if name == "MID" else 2 * x * f - 1


def cheb_coeffs(name: str, a: float, b: float, n: int = NODES) -> list[mpfr]:
    pi = gmpy2.const_pi()
    theta = [pi * (k + mpfr(0.5)) / n for k in range(n)]
    xs = [(mpfr(a) + b) / 2 + (mpfr(b) - a) / 2 * gmpy2.cos(t) for t in theta]
    fs = [_target(name, x) for x in xs]
    coeffs = []
    for j in range(n):
        acc = mpfr(0)
        for k in range(n):
            acc += fs[k] * gmpy2.cos(j * theta[k])
        coeffs.append(acc * 2 / n)
    coeffs[0] /= 2
    fmin = min(abs(f) for f in fs)
    keep = n
    while keep > 1 and abs(coeffs[keep - 1]) < TRUNCATE * fmin:
        keep -= 1
    return coeffs[:keep]


def to_monomial(cheb: list[mpfr]) -> list[mpfr]:
    """Coefficients of sum c_k T_k(t) in powers of t, lowest first."""
    n = len(cheb)
    out = [mpfr(0)] * n
    prev, cur = [mpfr(1)], [mpfr(0), mpfr(1)]
    for k, c in enumerate(cheb):
        tk = prev if k == 0 else cur
        if k >= 2:
            nxt = [mpfr(0)] + [2 * v for v in cur]
            for i, v in enumerate(prev):
                nxt[i] -= v
            prev, cur = cur, nxt
            tk = cur
        for i, v in enumerate(tk):
            out[i] += c * v
    return out


def fit(name: str) -> list[tuple[float, ...]]:
    lo, hi, step = RANGES[name]
    pieces = []
    with gmpy2.context(gmpy2.get_context(), precision=BITS):
        for i in range(round((hi - lo) / step)):
            a = lo + i * step
            mono = to_monomial(cheb_coeffs(name, a, a + step))
            # highest power first, as Horner consumes them
            pieces.append(tuple(float(c) for c in reversed(mono)))
    return pieces


def render(tables: dict[str, list[tuple[float, ...]]]) -> str:
    lines = [
        '"""Piecewise polynomials for Dawson\'s integral.',
        "",
        "Generated by scripts/fit_dawson.py; do not edit by hand.",
        '"""',
        "",
    ]
    for name, pieces in tables.items():
        lo, hi, step = RANGES[name]
        lines += [
            f"{name}_LO = {lo!r}",
            f"{name}_HI = {hi!r}",
            f"{name}_SCALE = {1 / step!r}  # intervals per unit",
            "# one tuple per interval, coefficients of t^k from the highest k down",
            f"{name} = (",
        ]
        for cs in pieces:
            lines.append("    (")
            lines += [f"        {c!r}," for c in cs]
            lines.append("    ),")
        lines += [")", ""]
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="fail if the committed table differs")
    args = ap.parse_args(argv)
    tables = {}
    for name in RANGES:
        tables[name] = fit(name)
        degs = sorted({len(p) - 1 for p in tables[name]})
        print(f"{name}: {len(tables[name])} intervals, degrees {degs}", file=sys.stderr)
    text = render(tables)
    if args.check:
        return 0 if OUT.read_text() == text else 1
    OUT.write_text(text)
    print(f"wrote {OUT}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
