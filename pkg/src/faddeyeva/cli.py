"""Command-line front end: ``faddeyeva {eval,grid,regions-map,bench}``.

Exit status is 0 on success, 1 on a usage or I/O error and 2 when ``eval``
overflows at the requested point.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .errors import InvalidArgumentError
from .evaluator import Status, w
from .grid import SCALES, GridSpec
from .regions import DEFAULT_PARAMS, TUNING_VERSION, Region, classify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_OVERFLOW = 2

GRID_HEADER = "x,y,re_w,im_w,re_ref,im_ref,relerr_re,relerr_im,relerr_mod,region,terms"
PGM_LEVELS = {Region.S: 64, Region.R: 128, Region.Q: 192, Region.STRIP: 255}
BENCH_SEED = 680
_CHUNK = 256


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which means overflow here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(v: float) -> str:
    """Shortest round-trip decimal."""
    return repr(float(v))


# ------------------------------------------------------------------ eval


def cmd_eval(args) -> int:
    z = complex(args.re, args.im)
    remedy = not args.no_remedy
    region = classify(z, DEFAULT_PARAMS, remedy)
    if args.engine == "oracle":
        from .oracle import format_sig, w_ref  # heavy import, only when asked

        ref = w_ref(z, args.digits)
        rec = {"re": format_sig(ref.re, args.digits), "im": format_sig(ref.im, args.digits),
               "region": str(region), "terms": None, "status": "ok", "engine": "oracle"}
        status = Status.OK
    else:
        res = w(z, DEFAULT_PARAMS, remedy)
        status = res.status
        rec = {"re": res.value.real, "im": res.value.imag, "region": str(res.region),
               "terms": res.terms_used, "status": str(res.status), "engine": "fast"}
    if args.format == "json":
        print(json.dumps(rec))
    else:
        re, im = rec["re"], rec["im"]
        if isinstance(re, float):
            re, im = _num(re), _num(im)
        print(f"w({_num(z.real)} + {_num(z.imag)}i) = {re} + {im}i")
        print(f"region: {rec['region']}")
        print(f"terms: {rec['terms'] if rec['terms'] is not None else '-'}")
        print(f"status: {rec['status']}")
    return EXIT_OVERFLOW if status is Status.OVERFLOW else EXIT_OK


# ------------------------------------------------------------------ grid


def _load_ref_cache(path: Path) -> dict[tuple[float, float], tuple[str, str]]:
    with path.open(newline="") as fh:
        return {(float(r["x"]), float(r["y"])): (r["re_ref"], r["im_ref"]) for r in csv.DictReader(fh)}


def _grid_rows(task) -> list[list[str]]:
    """Evaluate one chunk of grid points; runs in worker processes too."""
    pts, remedy, with_ref, cache = task
    rows = []
    if with_ref:
        from .oracle import format_sig, parse_ref, relerr, w_ref
    for x, y in pts:
        res = w(complex(x, y), DEFAULT_PARAMS, remedy)
        row = [_num(x), _num(y), _num(res.value.real), _num(res.value.imag)]
        if with_ref:
            hit = cache.get((x, y))
            if hit is None:
                ref = w_ref(complex(x, y), 25)
                hit = (format_sig(ref.re), format_sig(ref.im))
            e = relerr(res.value, parse_ref(*hit))
            row += [hit[0], hit[1], _num(e.re_rel), _num(e.im_rel), _num(e.mod_rel)]
        else:
            row += ["", "", "", "", ""]
        row += [str(res.region), str(res.terms_used)]
        rows.append(row)
    return rows


def run_grid(spec: GridSpec, remedy: bool = True, with_ref: bool = False,
             jobs: int = 1, cache: dict | None = None) -> list[list[str]]:
    """All rows of a grid sweep in x-major order, independent of ``jobs``."""
    pts = spec.points()
    cache = cache or {}
    tasks = []
    for i in range(0, len(pts), _CHUNK):
        chunk = pts[i:i + _CHUNK]
        tasks.append((chunk, remedy, with_ref, {p: cache[p] for p in chunk if p in cache}))
    if jobs <= 1:
        parts = map(_grid_rows, tasks)
        return [r for part in parts for r in part]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return [r for part in ex.map(_grid_rows, tasks) for r in part]


def render_csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(GRID_HEADER + "\n")
    for r in rows:
        buf.write(",".join(r) + "\n")
    return buf.getvalue()


def grid_summary(rows: list[list[str]]) -> str:
    if not rows or rows[0][8] == "":
        return f"rows={len(rows)}"
    best_mod = max(rows, key=lambda r: float(r[8]))
    best_comp = max(rows, key=lambda r: max(float(r[6]), float(r[7])))
    comp = max(float(best_comp[6]), float(best_comp[7]))
    return (f"rows={len(rows)} max_relerr_mod={best_mod[8]} at x={best_mod[0]} y={best_mod[1]}; "
            f"max_relerr_component={_num(comp)} at x={best_comp[0]} y={best_comp[1]}")


def _spec_from(args) -> GridSpec:
    return GridSpec(args.x_min, args.x_max, args.x_points, args.y_min, args.y_max, args.y_points,
                    args.x_scale, args.y_scale)


def cmd_grid(args) -> int:
    spec = _spec_from(args)
    cache = _load_ref_cache(Path(args.ref_cache)) if args.ref_cache else None
    rows = run_grid(spec, not args.no_remedy, args.with_ref, args.jobs, cache)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(rows))
    print(grid_summary(rows))
    return EXIT_OK


# ------------------------------------------------------------ regions-map


def region_grid(spec: GridSpec, remedy: bool = True) -> list[tuple[float, float, Region]]:
    return [(x, y, classify(complex(x, y), DEFAULT_PARAMS, remedy)) for x, y in spec.points()]


def render_pgm(spec: GridSpec, cells: list[tuple[float, float, Region]]) -> str:
    """P2 image, one column per x and one row per y, largest y on top."""
    nx, ny = spec.x_points, spec.y_points
    lines = [f"P2\n{nx} {ny}\n255"]
    for j in range(ny - 1, -1, -1):
        lines.append(" ".join(str(PGM_LEVELS[cells[i * ny + j][2]]) for i in range(nx)))
    return "\n".join(lines) + "\n"


def cmd_regions_map(args) -> int:
    spec = _spec_from(args)
    cells = region_grid(spec, not args.no_remedy)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("x,y,region\n")
        for x, y, reg in cells:
            fh.write(f"{_num(x)},{_num(y)},{reg}\n")
    if args.pgm:
        with open(args.pgm, "w", encoding="ascii", newline="") as fh:
            fh.write(render_pgm(spec, cells))
    counts = {str(r): 0 for r in PGM_LEVELS}
    for _, _, reg in cells:
        counts[str(reg)] += 1
    print(" ".join(f"{k}={v}" for k, v in counts.items()))
    return EXIT_OK


# ----------------------------------------------------------------- bench


def bench_points(region: str, n: int, seed: int = BENCH_SEED) -> list[complex]:
    p = DEFAULT_PARAMS
    rng = random.Random(seed)
    if region == "strip":
        lo, hi = math.log10(1e-20), math.log10(p.strip_y_max)
        return [complex(rng.uniform(p.strip_x_min, p.strip_x_max), 10.0 ** rng.uniform(lo, hi))
                for _ in range(n)]
    if region == "all":
        return [complex(rng.uniform(0, 30), rng.uniform(0, 30)) for _ in range(n)]
    want = Region(region)
    box = {Region.S: 0.292, Region.R: 1.0, Region.Q: 5.0}[want]
    out = []
    while len(out) < n:
        z = complex(rng.uniform(0, box * p.x0), rng.uniform(0, box * p.y0))
        if classify(z, p, True) is want:
            out.append(z)
    return out


def _quantile(sorted_vals: list[int], q: float) -> float:
    k = min(len(sorted_vals) - 1, max(0, math.ceil(q * len(sorted_vals)) - 1))
    return float(sorted_vals[k])


def run_bench(region: str, n: int, seed: int = BENCH_SEED) -> dict:
    pts = bench_points(region, n, seed)
    clock = time.perf_counter_ns
    on, off = [], []
    for i, z in enumerate(pts):
        # alternate the order so drift and cache effects hit both sides
        for remedy in ((True, False) if i % 2 == 0 else (False, True)):
            t0 = clock()
            w(z, DEFAULT_PARAMS, remedy)
            dt = clock() - t0
            (on if remedy else off).append(dt)
    on.sort()
    off.sort()
    res = {
        "region": region,
        "samples": n,
        "seed": seed,
        "on_median_ns": _quantile(on, 0.5),
        "on_p99_ns": _quantile(on, 0.99),
        "off_median_ns": _quantile(off, 0.5),
        "off_p99_ns": _quantile(off, 0.99),
    }
    res["ratio_off_over_on"] = res["off_median_ns"] / res["on_median_ns"]
    return res


def format_bench(r: dict) -> str:
    return "\n".join([
        f"region={r['region']} samples={r['samples']} seed={r['seed']}",
        f"remedy-on   median_ns={r['on_median_ns']:.0f} p99_ns={r['on_p99_ns']:.0f}",
        f"remedy-off  median_ns={r['off_median_ns']:.0f} p99_ns={r['off_p99_ns']:.0f}",
        f"ratio off/on (median) = {r['ratio_off_over_on']:.3f}",
    ])


def cmd_bench(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    print(format_bench(run_bench(args.region, args.samples, args.seed)))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _add_grid_flags(sp: argparse.ArgumentParser) -> None:
    for ax in ("x", "y"):
        sp.add_argument(f"--{ax}-min", type=float, required=True)
        sp.add_argument(f"--{ax}-max", type=float, required=True)
        sp.add_argument(f"--{ax}-points", type=int, required=True)
        sp.add_argument(f"--{ax}-scale", choices=SCALES, default="linear")
    sp.add_argument("--out", required=True, help="CSV output path")
    sp.add_argument("--no-remedy", action="store_true", help="disable the near-axis strip kernel")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="faddeyeva", description="Faddeyeva function w(z) in double precision.")
    ap.add_argument("--version", action="version",
                    version=f"faddeyeva {__version__} (tuning table {TUNING_VERSION})")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate w at one point")
    e.add_argument("--re", type=float, required=True)
    e.add_argument("--im", type=float, required=True)
    e.add_argument("--no-remedy", action="store_true")
    e.add_argument("--engine", choices=["fast", "oracle"], default="fast")
    e.add_argument("--digits", type=int, default=25, help="oracle digits (20-50)")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_eval)

    g = sub.add_parser("grid", help="sweep a grid and write a CSV accuracy map")
    _add_grid_flags(g)
    g.add_argument("--with-ref", action="store_true", help="add oracle columns and relative errors")
    g.add_argument("--ref-cache", help="CSV of x,y,re_ref,im_ref to reuse instead of recomputing")
    g.add_argument("--jobs", type=int, default=1)
    g.set_defaults(func=cmd_grid)

    r = sub.add_parser("regions-map", help="write the region label of each grid point")
    _add_grid_flags(r)
    r.add_argument("--pgm", help="also write a P2 grayscale map")
    r.set_defaults(func=cmd_regions_map)

    b = sub.add_parser("bench", help="time evaluation with and without the remedy")
    b.add_argument("--region", choices=["strip", "S", "R", "Q", "all"], default="strip")
    b.add_argument("--samples", type=int, default=100_000)
    b.add_argument("--seed", type=int, default=BENCH_SEED)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidArgumentError, ValueError) as exc:
        print(f"faddeyeva: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"faddeyeva: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
