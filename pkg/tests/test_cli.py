import csv
import json
import subprocess
import sys

import pytest

from faddeyeva import cli
from faddeyeva.grid import GridSpec
from faddeyeva.regions import TUNING_VERSION, Region, classify


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_origin(capsys):
    code, out, _ = run(capsys, "eval", "--re", "0", "--im", "0")
    assert code == 0
    assert "= 1.0 + 0.0i" in out
    assert "region: S" in out and "status: ok" in out


def test_eval_strip_and_no_remedy(capsys):
    code, out, _ = run(capsys, "eval", "--re", "6.3", "--im", "1e-6", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["region"] == "RemedyStrip" and rec["terms"] == 7
    code, out, _ = run(capsys, "eval", "--re", "6.3", "--im", "1e-6", "--no-remedy", "--format", "json")
    assert json.loads(out)["region"] == "Q"


def test_eval_overflow_exit_code(capsys):
    code, out, _ = run(capsys, "eval", "--re", "0", "--im", "-30")
    assert code == 2
    assert "status: overflow" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--re", "abc", "--im", "0"],
        ["eval", "--re", "1"],
        ["eval", "--re", "nan", "--im", "0"],
        ["nosuch"],
        [],
        ["bench", "--region", "X"],
        ["bench", "--samples", "0"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_eval_oracle_engine(capsys):
    code, out, _ = run(capsys, "eval", "--re", "0", "--im", "1", "--engine", "oracle", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["re"].startswith("4.275835761558070")
    code, _, err = run(capsys, "eval", "--re", "40", "--im", "1", "--engine", "oracle")
    assert code == 1 and "error" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert f"tuning table {TUNING_VERSION}" in capsys.readouterr().out


GRID_2x2 = ["--x-min", "1", "--x-max", "7", "--x-points", "2", "--y-min", "1e-6", "--y-max", "2",
            "--y-points", "2", "--y-scale", "log"]


def test_grid_trivial_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "grid", *GRID_2x2, "--out", str(a))[0] == 0
    assert run(capsys, "grid", *GRID_2x2, "--out", str(b))[0] == 0
    text = a.read_bytes()
    assert text == b.read_bytes()
    lines = text.decode().splitlines()
    assert lines[0] == cli.GRID_HEADER
    assert len(lines) == 5
    assert [ln.split(",")[:2] for ln in lines[1:]] == [["1.0", "1e-06"], ["1.0", "2.0"], ["7.0", "1e-06"], ["7.0", "2.0"]]
    assert b"\r" not in text


def test_grid_with_ref_columns_and_summary(tmp_path, capsys):
    out = tmp_path / "g.csv"
    code, summary, _ = run(capsys, "grid", *GRID_2x2, "--out", str(out), "--with-ref")
    assert code == 0
    with out.open() as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        mant = r["re_ref"].split("e")[0].replace(".", "").lstrip("-")
        assert len(mant) == 25
        assert float(r["relerr_mod"]) >= 0
        x, y = float(r["x"]), float(r["y"])
        assert r["region"] == str(classify(complex(x, y)))
    top = max(rows, key=lambda r: float(r["relerr_mod"]))
    assert f"max_relerr_mod={top['relerr_mod']} at x={top['x']} y={top['y']}" in summary


def test_grid_region_column_without_remedy(tmp_path, capsys):
    out = tmp_path / "g.csv"
    spec = ["--x-min", "2", "--x-max", "19", "--x-points", "5", "--y-min", "1e-9", "--y-max", "0.03",
            "--y-points", "3", "--y-scale", "log"]
    assert run(capsys, "grid", *spec, "--out", str(out), "--no-remedy")[0] == 0
    with out.open() as fh:
        for r in csv.DictReader(fh):
            assert r["region"] == str(classify(complex(float(r["x"]), float(r["y"])), remedy_enabled=False))
            assert r["region"] != "RemedyStrip"


def test_grid_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "grid", *GRID_2x2, "--out", str(tmp_path / "no" / "such" / "x.csv"))
    assert code == 1 and "error" in err


@pytest.mark.parametrize(
    "bad",
    [
        ["--x-points", "1"],
        ["--y-min", "0", "--y-scale", "log"],
        ["--x-min", "8"],
    ],
)
def test_grid_bad_spec(tmp_path, capsys, bad):
    argv = GRID_2x2 + bad
    code, _, err = run(capsys, "grid", *argv, "--out", str(tmp_path / "x.csv"))
    assert code == 1


def test_grid_jobs_identical(tmp_path):
    spec = GridSpec(1.8396, 20, 23, 1e-20, 0.031623, 29, "linear", "log")
    one = cli.render_csv(cli.run_grid(spec, jobs=1))
    many = cli.render_csv(cli.run_grid(spec, jobs=3))
    assert one == many


def test_regions_map(tmp_path, capsys):
    csv_out, pgm = tmp_path / "r.csv", tmp_path / "r.pgm"
    spec = ["--x-min", "0", "--x-max", "9.9", "--x-points", "100", "--y-min", "0", "--y-max", "9.9",
            "--y-points", "100"]
    assert run(capsys, "regions-map", *spec, "--out", str(csv_out), "--pgm", str(pgm))[0] == 0
    text = pgm.read_text()
    assert text.startswith("P2\n100 100\n255\n")
    body = text.split("\n")[3:-1]
    assert len(body) == 100 and all(len(row.split(" ")) == 100 for row in body)
    assert set(" ".join(body).split(" ")) <= {"64", "128", "192", "255"}
    # bottom-left pixel is the origin, region S
    assert body[-1].split(" ")[0] == "64"
    rows = {(r["x"], r["y"]): r["region"] for r in csv.DictReader(csv_out.open())}
    assert rows[("0.0", "0.0")] == "S"


def test_regions_map_named_points(tmp_path, capsys):
    out = tmp_path / "r.csv"
    spec = ["--x-min", "1", "--x-max", "6.3", "--x-points", "2", "--y-min", "1e-6", "--y-max", "1",
            "--y-points", "2"]
    run(capsys, "regions-map", *spec, "--out", str(out))
    rows = {(r["x"], r["y"]): r["region"] for r in csv.DictReader(out.open())}
    assert rows[("1.0", "1.0")] == "S"
    assert rows[("6.3", "1e-06")] == "RemedyStrip"


def test_pgm_levels():
    assert cli.PGM_LEVELS == {Region.S: 64, Region.R: 128, Region.Q: 192, Region.STRIP: 255}


def test_bench_report(capsys):
    code, out, _ = run(capsys, "bench", "--region", "strip", "--samples", "300")
    assert code == 0
    assert "remedy-on   median_ns=" in out and "remedy-off  median_ns=" in out
    assert "ratio off/on (median) =" in out


def test_bench_points_in_region():
    for reg in ("S", "R", "Q"):
        pts = cli.bench_points(reg, 50)
        assert all(str(classify(z)) == reg for z in pts)
        # outside the strip the flag changes nothing
        assert all(classify(z, remedy_enabled=False) == classify(z) for z in pts)
    assert all(classify(z) is Region.STRIP for z in cli.bench_points("strip", 200))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "faddeyeva", "eval", "--re", "1", "--im", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "region: S" in res.stdout
