import csv
import io
import json
import os
import subprocess

import pytest

EXE = os.environ.get("GBM_LAB", "gbm-lab")
PUBLISHED = [3.18, 8.96, 12.63, 15.9, 18.98, 21.93, 24.78, 27.57]


def run(*args, check=True):
    proc = subprocess.run([EXE, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
    return proc


def test_table1_csv():
    rows = list(csv.DictReader(io.StringIO(run("table1").stdout)))
    assert len(rows) == 8
    for row, want in zip(rows, PUBLISHED):
        assert abs(float(row["min_a"]) - want) <= 0.02


def test_table1_json_has_schema():
    out = json.loads(run("table1", "--format", "json").stdout)
    assert out["schema"] == "gbm-lab/1"
    assert len(out["rows"]) == 8


def test_gen_is_byte_identical(tmp_path):
    paths = []
    for name in ("a", "b"):
        p = tmp_path / name
        run("gen", "--n", 1000, "--a", 9, "--b", 1, "--seed", 7, "--out", p)
        paths.append(p)
    for suffix in ("", ".emb", ".truth", ".json"):
        assert (tmp_path / f"a{suffix}").read_bytes() == (tmp_path / f"b{suffix}").read_bytes()
    header = paths[0].read_text().splitlines()[0].split()
    assert header[0] == "1000" and header[2] == "1"
    assert b"\r" not in paths[0].read_bytes()


def test_gen_stdout_matches_file(tmp_path):
    p = tmp_path / "g"
    run("gen", "--n", 300, "--a", 5, "--b", 1, "--seed", 2, "--out", p)
    assert run("gen", "--n", 300, "--a", 5, "--b", 1, "--seed", 2, "--out", "-").stdout == p.read_text()


def test_recover_then_eval(tmp_path):
    g = tmp_path / "g"
    run("gen", "--n", 2000, "--a", 13, "--b", 1, "--seed", 4, "--out", g)
    res_path = tmp_path / "r.json"
    dec = tmp_path / "d.csv"
    labels = tmp_path / "labels"
    run("recover", "--graph", g, "--a", 13, "--b", 1, "--out", res_path, "--decisions", dec,
        "--labels-out", labels)
    res = json.loads(res_path.read_text())
    assert res["schema"] == "gbm-lab/1"
    for key in ("params", "thresholds", "stats", "labels", "config", "version"):
        assert key in res
    meta = json.loads((tmp_path / "g.json").read_text())
    assert res["params"]["graph_fingerprint"] == meta["graph"]["fingerprint"]
    assert len(res["labels"]) == 2000
    rows = list(csv.DictReader(io.StringIO(dec.read_text())))
    assert list(rows[0].keys()) == ["u", "v", "count", "kept"]
    assert len(rows) == res["stats"]["edges_total"]
    for source in (res_path, labels):
        ev = json.loads(run("eval", "--labels", source, "--truth", f"{g}.truth").stdout)
        assert "f_score" in ev["metrics"]
        assert ev["schema"] == "gbm-lab/1"


def test_raw_and_scaled_radii_agree(tmp_path):
    g = tmp_path / "g"
    run("gen", "--n", 1000, "--a", 9, "--b", 1, "--seed", 1, "--out", g)
    meta = json.loads((tmp_path / "g.json").read_text())
    rs, rd = meta["config"]["radii"]["r_s"], meta["config"]["radii"]["r_d"]
    h = tmp_path / "h"
    run("gen", "--n", 1000, "--rs", repr(rs), "--rd", repr(rd), "--seed", 1, "--out", h)
    assert g.read_bytes() == h.read_bytes()


def test_recover_hd_and_locations(tmp_path):
    g = tmp_path / "s"
    run("gen", "--n", 2000, "--t", 2, "--a", 8, "--b", 2, "--seed", 3, "--out", g)
    out = json.loads(run("recover-hd", "--graph", g, "--a", 8, "--b", 2, "--truth", f"{g}.truth").stdout)
    assert out["thresholds"]["e_d"] < out["thresholds"]["e_s"]
    loc = json.loads(run("recover-loc", "--graph", g, "--embedding", f"{g}.emb", "--a", 8, "--b", 2).stdout)
    assert loc["result"]["conflict"] is False
    assert run("recover", "--graph", g, "--a", 8, "--b", 2, check=False).returncode == 1


def test_dense_reports_queries():
    out = json.loads(run("dense", "--n", 10000, "--t", 2, "--rs", 1.6, "--rd", 0.4, "--seed", 3,
                         "--no-labels").stdout)
    plan = out["plan"]
    n, h, g = 10000, plan["h"], plan["g"]
    assert out["queries_used"] == h * (h - 1) // 2 + (n - h) * 2 * g
    assert out["fraction_probed"] == pytest.approx(out["queries_used"] / (n * (n - 1) / 2))
    assert "labels" not in out


def test_phase_csv_and_jobs_independence(tmp_path):
    args = ["phase", "--n", 3000, "--a", "1.6,3", "--b", "0,1.0", "--trials", 4, "--seed", 5]
    one = run(*args, "--jobs", 1).stdout
    many = run(*args, "--jobs", 3).stdout
    assert one == many
    lines = one.splitlines()
    assert lines[0] == "a,b,trials,connected_frac,isolated_frac,mean_components"
    assert len(lines) == 5
    p = tmp_path / "p.csv"
    run(*args, "--out", p)
    assert json.loads((tmp_path / "p.csv.meta.json").read_text())["schema"] == "gbm-lab/1"


def test_exit_codes():
    assert run("nonsense", check=False).returncode == 1
    assert run("gen", "--n", 10, "--bogus", 1, check=False).returncode == 1
    assert run("gen", "--n", 10, "--a", 2, "--b", 1, "--rs", 0.1, "--rd", 0.05, check=False).returncode == 1
    bad = run("thresholds", "--n", 5000, "--a", 1, "--b", 1, check=False)
    assert bad.returncode == 2 and "REGIME" in bad.stderr
    assert run("thresholds", "--n", 5000, "--t", 2, "--rs", 0.3, "--rd", 0.3, check=False).returncode == 2
    assert run("--version").stdout.startswith("gbm-lab ")
