"""Calibrate the region-R and region-Q schedules against the oracle.

    python scripts/calibrate.py r        # (h, kapn, nu) per rho band in R
    python scripts/calibrate.py q        # convergents per rho band in Q
    python scripts/calibrate.py strip    # error of the strip kernel versus its degree

Each band [rho_i, rho_{i+1}) gets probe points spread over angle, plus
points hugging the top edge of the remedy strip, where the real part is
smallest, and points close to the imaginary axis, where the imaginary part
is.  A band's parameters are the cheapest ones meeting TARGET
on every probe point of the band.  Reference values are cached in
scripts/data/calib_ref.csv; outside [0, 30]^2 (large rho in Q only)
mpmath's erfc serves as the reference.

The printed knots are pasted into src/faddeyeva/regions.py.
"""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys
from pathlib import Path

import mpmath
from gmpy2 import mpfr

from faddeyeva.evaluator import _upward_sum, w_cf, w_downward
from faddeyeva.grid import STRIP_GRID
from faddeyeva.oracle import W_DOMAIN, format_sig, w_ref
from faddeyeva.regions import DEFAULT_PARAMS, Region, classify

TARGET = 2e-13
SEED = 916
PER_BAND = 60
CACHE = Path(__file__).resolve().parent / "data" / "calib_ref.csv"
FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

R_EDGES = [0.292, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0]
Q_EDGES = [1.0, 1.1, 1.2, 1.35, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 6.5, 8.0, 12.0,
           20.0, 30.0, 50.0, 80.0, 150.0, 300.0, 1000.0]
H_GRID = [0.1 * k for k in range(1, 21)]

Y_STRIP = math.nextafter(DEFAULT_PARAMS.strip_y_max, math.inf)


class RefCache:
    def __init__(self, path: Path = CACHE):
        self.path = path
        self.data: dict[tuple[float, float], complex] = {}
        if path.exists():
            with path.open(newline="") as fh:
                for row in list(csv.reader(fh))[1:]:
                    self.data[(float(row[0]), float(row[1]))] = complex(float(row[2]), float(row[3]))
        self._pending: list[list[str]] = []

    def get(self, x: float, y: float) -> complex:
        key = (x, y)
        if key not in self.data:
            if x <= W_DOMAIN and y <= W_DOMAIN:
                ref = w_ref(complex(x, y), 20)
                re, im = ref.re, ref.im
            else:
                with mpmath.workdps(40):
                    z = mpmath.mpc(x, y)
                    v = mpmath.exp(-z * z) * mpmath.erfc(-1j * z)
                    re, im = mpmath.nstr(v.real, 30), mpmath.nstr(v.imag, 30)
            self.data[key] = complex(float(re), float(im))
            self._pending.append([repr(x), repr(y), format_sig(mpfr(re), 20), format_sig(mpfr(im), 20)])
        return self.data[key]

    def save(self) -> None:
        if not self._pending:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        new = not self.path.exists()
        with self.path.open("a", newline="") as fh:
            wr = csv.writer(fh, lineterminator="\n")
            if new:
                wr.writerow(["x", "y", "re_ref", "im_ref"])
            wr.writerows(self._pending)
        self._pending = []


def comp_err(a: complex, r: complex) -> float:
    """Worst componentwise relative error, guarded as in oracle.relerr."""
    mod = abs(r)
    floor = 1e-300 * mod
    er = abs(a.real - r.real) / (abs(r.real) if abs(r.real) >= floor else mod)
    ei = abs(a.imag - r.imag) / (abs(r.imag) if abs(r.imag) >= floor else mod)
    return max(er, ei)


def band_points(lo: float, hi: float, want: Region, rng: random.Random) -> list[tuple[float, float]]:
    p = DEFAULT_PARAMS
    pts = []
    # the low edge of the band is usually the hardest
    for k in range(PER_BAND):
        r = lo if k % 3 == 0 else rng.uniform(lo, hi)
        th = rng.uniform(0.0, math.pi / 2) if k % 2 else (math.pi / 2) * k / PER_BAND
        pts.append((p.x0 * r * math.cos(th), p.y0 * r * math.sin(th)))
    for k in range(PER_BAND // 3):
        r = lo if k == 0 else rng.uniform(lo, hi)
        for y in (Y_STRIP, 0.05, 0.2):
            x2 = (r * p.x0) ** 2 - (y * p.x0 / p.y0) ** 2
            if x2 > 0:
                pts.append((math.sqrt(x2), y))
    # near the imaginary axis the small imaginary part sets the term count
    for r in (lo, 0.5 * (lo + hi)):
        for x in (1e-3, 0.05, 0.2, 0.4, 0.7, 1.0, 1.5, 2.0):
            y2 = (r * p.y0) ** 2 - (x * p.y0 / p.x0) ** 2
            if y2 > 0:
                pts.append((x, math.sqrt(y2)))
    if want is Region.Q:
        # past the strip the fraction also covers the axis itself
        pts += [(x, y) for x in (20.0, 25.0, 40.0, 100.0) for y in (1e-10, 1e-3)
                if lo <= math.hypot(x / p.x0, y / p.y0) < hi]
    return [(x, y) for x, y in pts if classify(complex(x, y), p, True) is want and y > 0]


def calibrate_r(cache: RefCache) -> list[tuple[float, float, int, int, float]]:
    rng = random.Random(SEED)
    out = []
    for lo, hi in zip(R_EDGES, R_EDGES[1:]):
        pts = band_points(lo, hi, Region.R, rng)
        refs = [cache.get(x, y) for x, y in pts]
        cache.save()
        best = None
        for h in H_GRID:
            for kapn in range(2, 60):
                if best and kapn + kapn + 1 >= best[0]:
                    break
                nu = _min_nu(pts, refs, lambda z, n: w_downward(z, h, kapn, n), kapn + 1, 90)
                if nu is None:
                    continue
                cost = nu + kapn
                if best is None or cost < best[0]:
                    best = (cost, round(h, 1), kapn, nu)
        cost, h, kapn, nu = best
        worst = max(comp_err(w_downward(complex(x, y), h, kapn, nu), r) for (x, y), r in zip(pts, refs))
        print(f"rho [{lo}, {hi}): h={h} kapn={kapn} nu={nu} worst={worst:.2e} ({len(pts)} pts)",
              file=sys.stderr, flush=True)
        out.append((lo, h, kapn, nu, worst))
    return out


def _min_nu(pts, refs, fn, start: int, stop: int):
    order = list(range(len(pts)))
    for nu in range(start, stop):
        for j, i in enumerate(order):
            x, y = pts[i]
            if comp_err(fn(complex(x, y), nu), refs[i]) > TARGET:
                order.insert(0, order.pop(j))  # try the failing point first next time
                break
        else:
            return nu
    return None


def calibrate_q(cache: RefCache) -> list[tuple[float, int, float]]:
    rng = random.Random(SEED + 1)
    out = []
    for lo, hi in zip(Q_EDGES, Q_EDGES[1:]):
        pts = band_points(lo, hi, Region.Q, rng)
        refs = [cache.get(x, y) for x, y in pts]
        cache.save()
        nu = _min_nu(pts, refs, w_cf, 1, 40)
        worst = max(comp_err(w_cf(complex(x, y), nu), r) for (x, y), r in zip(pts, refs))
        print(f"rho [{lo}, {hi}): nu={nu} worst={worst:.2e} ({len(pts)} pts)", file=sys.stderr, flush=True)
        out.append((lo, nu, worst))
    return out


def strip_degree_report(degrees=range(4, 11)) -> dict[int, float]:
    """Max componentwise error over the strip fixture for each Taylor degree."""
    with (FIXTURES / "strip_ref.csv").open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    refs = [(float(r["x"]), float(r["y"]), complex(float(r["re_ref"]), float(r["im_ref"]))) for r in rows]
    assert len(refs) == len(STRIP_GRID.points())
    return {n: max(comp_err(_upward_sum(x, y, n), r) for x, y, r in refs) for n in degrees}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="calibrate region schedules")
    ap.add_argument("what", choices=["r", "q", "strip"])
    args = ap.parse_args(argv)
    cache = RefCache()
    if args.what == "r":
        res = calibrate_r(cache)
        for name, col in (("_H_SCHEDULE", 1), ("_KAPN_SCHEDULE", 2), ("_R_NU_SCHEDULE", 3)):
            print(f"{name}: Schedule = (")
            for row in res:
                print(f"    ({row[0]}, {row[col]}),")
            print(")")
    elif args.what == "q":
        res = calibrate_q(cache)
        print("_NU_SCHEDULE: Schedule = (")
        for lo, nu, _ in res:
            print(f"    ({lo}, {nu}),")
        print(")")
    else:
        for n, err in strip_degree_report().items():
            mark = "ok" if err <= 5e-13 else "--"
            print(f"degree {n}: max componentwise error {err:.3e} {mark}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
