import json

import pytest

from rangehull import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def data_lines(text):
    return [ln for ln in text.splitlines() if ln and not ln.startswith("#")]


def test_gen_grid_is_stable(capsys):
    code, out, _ = run(capsys, "gen", "--n", "4", "--dist", "grid", "--seed", "3")
    assert code == 0
    pts = [tuple(map(int, ln.split())) for ln in data_lines(out)]
    assert len(pts) == 4 and len(set(pts)) == 4
    assert run(capsys, "gen", "--n", "4", "--dist", "grid", "--seed", "3")[1] == out


@pytest.mark.parametrize("dist", cli.DISTS)
def test_gen_same_seed_same_bytes(tmp_path, capsys, dist):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "--n", "300", "--dist", dist, "--seed", "9", "--out", str(a))
    run(capsys, "gen", "--n", "300", "--dist", dist, "--seed", "9", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    pts = cli.read_points(str(a))
    assert len(pts) == 300 and all(0 <= x <= 10**6 and 0 <= y <= 10**6 for x, y in pts)


def test_gen_collinear(capsys):
    for seed in range(5):
        pts = [tuple(map(int, ln.split())) for ln in data_lines(run(capsys, "gen", "--n", "1000", "--dist", "collinear", "--seed", str(seed))[1])]
        (x0, y0), (x1, y1) = pts[0], pts[1]
        assert all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0) for x, y in pts)


def test_gen_rejects_bad_range(capsys):
    assert run(capsys, "gen", "--n", "3", "--range", str(2**31))[0] == 3


@pytest.fixture
def square_files(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("# square\n0 0\n4 0\n\n4 4\n0 4\n2 2\n")
    qs = tmp_path / "q.txt"
    qs.write_text("0 4 0 4\n10 20 10 20\n")
    return str(pts), str(qs)


def test_query_all_on_square(capsys, square_files):
    pts, qs = square_files
    code, out, _ = run(capsys, "query", "--points", pts, "--queries", qs, "--mode", "all", "--json")
    assert code == 0
    full, empty = [json.loads(ln) for ln in out.splitlines()]
    assert full == {"count": 4, "area2": 32, "area": 16.0, "perimeter": 16.0,
                    "hull": [[4, 4], [0, 4], [0, 0], [4, 0]]}
    assert empty == {"count": 0, "area2": 0, "area": 0.0, "perimeter": 0.0, "hull": []}


def test_query_modes_and_stats(capsys, square_files):
    pts, qs = square_files
    recs = {}
    for mode in cli.MODES:
        out = run(capsys, "query", "--points", pts, "--queries", qs, "--mode", mode, "--stats")[1]
        recs[mode] = [json.loads(ln) for ln in out.splitlines()]
    assert set(recs["report"][0]) == {"hull", "stats"}
    assert set(recs["count"][0]) == {"count", "stats"}
    assert set(recs["area"][0]) == {"area2", "area", "stats"}
    assert set(recs["perimeter"][0]) == {"perimeter", "stats"}
    st = recs["all"][0]["stats"]
    assert set(st) == {"orient_calls", "tangent_calls", "tangent_probes", "pushes", "pops",
                       "canonical_nodes_visited"}
    assert st["pops"] <= st["pushes"]


def test_query_parse_error_names_line(tmp_path, capsys, square_files):
    pts, _ = square_files
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 0 1\n0 1 zero 1\n")
    code, out, err = run(capsys, "query", "--points", pts, "--queries", str(bad))
    assert code == 2 and "bad.txt:2" in err
    bad.write_text("0 1 0\n")
    assert run(capsys, "query", "--points", pts, "--queries", str(bad))[0] == 2


def test_query_coordinate_bound(tmp_path, capsys, square_files):
    _, qs = square_files
    big = tmp_path / "big.txt"
    big.write_text(f"0 0\n{2**30 + 1} 5\n")
    code, _, err = run(capsys, "query", "--points", str(big), "--queries", qs)
    assert code == 3 and "2^30" in err


def test_query_is_deterministic(capsys, square_files):
    pts, qs = square_files
    a = run(capsys, "query", "--points", pts, "--queries", qs, "--stats")[1]
    assert run(capsys, "query", "--points", pts, "--queries", qs, "--stats")[1] == a


def test_verify_small_runs(capsys):
    code, out, _ = run(capsys, "verify", "--instances", "1", "--n-max", "1")
    assert code == 0 and "0 failures" in out
    assert run(capsys, "verify", "--instances", "10", "--queries-per", "20", "--seed", "4")[0] == 0


@pytest.mark.parametrize("mutation", sorted(cli.MUTATIONS))
def test_verify_catches_planted_bugs(capsys, mutation):
    code, out, _ = run(capsys, "verify", "--instances", "10", "--queries-per", "20", "--mutate", mutation)
    assert code == 1
    assert "repro points=" in out


def test_bench_reports_every_mode(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    run(capsys, "gen", "--n", "2000", "--seed", "1", "--out", str(pts))
    report = tmp_path / "bench.json"
    code, out, _ = run(capsys, "bench", "--points", str(pts), "--queries", "30", "--warmup", "2",
                       "--iters", "2", "--out", str(report))
    assert code == 0 and "oracle" in out
    res = json.loads(report.read_text())
    assert set(res["modes"]) == {"report", "count", "area", "perimeter"}
    for m in res["modes"].values():
        assert m["median_us"] > 0 and m["p99_us"] >= m["median_us"]
        assert m["max_pushes_per_chain"] <= (11 + 1) ** 2
    code, out, _ = run(capsys, "bench", "--points", str(pts), "--queries", "5", "--json")
    assert json.loads(out)["queries"] == 5
