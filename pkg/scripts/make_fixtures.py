"""Generate the oracle fixture tables under tests/fixtures/.

    python scripts/make_fixtures.py strip     # 200 x 50 near-axis grid
    python scripts/make_fixtures.py global    # 10^4 seeded points in [0, 30]^2
    python scripts/make_fixtures.py dawson    # 10^4 log-spaced x in [1e-8, 100]
    python scripts/make_fixtures.py defect    # strip sweep with and without remedy

Rows are x,y,re_ref,im_ref (x,f_ref for the Dawson table) with the
coordinates in shortest round-trip form and the reference values to 25
significant digits.  The w tables are resumable: rows already present in a
partial file are kept.  The defect summary is JSON, computed from the strip
table, so run it after ``strip``.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from pathlib import Path

from faddeyeva.cli import run_grid
from faddeyeva.grid import STRIP_GRID, axis
from faddeyeva.oracle import f_ref, format_sig, w_ref

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"
GLOBAL_SEED = 680
GLOBAL_COUNT = 10_000
HEADER = ["x", "y", "re_ref", "im_ref"]


def global_points(n: int = GLOBAL_COUNT, seed: int = GLOBAL_SEED) -> list[tuple[float, float]]:
    rng = random.Random(seed)
    return [(rng.uniform(0.0, 30.0), rng.uniform(0.0, 30.0)) for _ in range(n)]


def dawson_points(n: int = 10_000) -> list[float]:
    return axis(1e-8, 100.0, n, "log")


def generate_dawson() -> Path:
    path = FIXTURES / "dawson_ref.csv"
    with path.open("w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(["x", "f_ref"])
        for x in dawson_points():
            wr.writerow([repr(x), format_sig(f_ref(x, 25))])
    return path


def strip_sweep_maxima(remedy: bool, cache: dict) -> dict:
    rows = run_grid(STRIP_GRID, remedy=remedy, with_ref=True, cache=cache)
    comp = max(rows, key=lambda r: max(float(r[6]), float(r[7])))
    mod = max(rows, key=lambda r: float(r[8]))
    return {
        "max_relerr_component": max(float(comp[6]), float(comp[7])),
        "at_component": [float(comp[0]), float(comp[1])],
        "max_relerr_mod": float(mod[8]),
        "at_mod": [float(mod[0]), float(mod[1])],
    }


def generate_defect() -> Path:
    with (FIXTURES / "strip_ref.csv").open(newline="") as fh:
        cache = {(float(r["x"]), float(r["y"])): (r["re_ref"], r["im_ref"]) for r in csv.DictReader(fh)}
    on, off = strip_sweep_maxima(True, cache), strip_sweep_maxima(False, cache)
    summary = {
        "grid": "strip 200x50",
        "remedy": on,
        "no_remedy": off,
        "ratio_component": off["max_relerr_component"] / on["max_relerr_component"],
        "ratio_mod": off["max_relerr_mod"] / on["max_relerr_mod"],
    }
    path = FIXTURES / "strip_defect.json"
    path.write_text(json.dumps(summary, indent=2) + "\n")
    return path


TARGETS = {
    "strip": ("strip_ref.csv", STRIP_GRID.points),
    "global": ("global_ref.csv", global_points),
    "dawson": ("dawson_ref.csv", dawson_points),
    "defect": ("strip_defect.json", None),
}


def _existing(path: Path) -> dict[tuple[str, str], list[str]]:
    if not path.exists():
        return {}
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    return {(r[0], r[1]): r for r in rows[1:] if len(r) == 4}


def generate(name: str) -> Path:
    if name == "dawson":
        return generate_dawson()
    if name == "defect":
        return generate_defect()
    fname, points_fn = TARGETS[name]
    path = FIXTURES / fname
    partial = path.with_suffix(".partial")
    done = _existing(partial)
    pts = points_fn()
    t0 = time.time()
    with partial.open("a", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        if not done:
            wr.writerow(HEADER)
        for i, (x, y) in enumerate(pts):
            key = (repr(x), repr(y))
            if key in done:
                continue
            ref = w_ref(complex(x, y), 25)
            row = [key[0], key[1], format_sig(ref.re), format_sig(ref.im)]
            wr.writerow(row)
            fh.flush()
            done[key] = row
            if i % 500 == 0:
                print(f"{name}: {i}/{len(pts)} {time.time() - t0:.0f}s", file=sys.stderr, flush=True)
    # final file in generation order, independent of how often we resumed
    with path.open("w", newline="") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(HEADER)
        for x, y in pts:
            wr.writerow(done[(repr(x), repr(y))])
    partial.unlink()
    return path


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="generate oracle fixtures")
    ap.add_argument("targets", nargs="+", choices=sorted(TARGETS))
    args = ap.parse_args(argv)
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for t in args.targets:
        print(f"wrote {generate(t)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
