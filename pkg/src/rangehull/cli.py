"""Command line: generate point sets, run queries, verify against the oracle, bench.

    rangehull gen --n 1000 --dist uniform --seed 1 --out pts.txt
    rangehull query --points pts.txt --queries rects.txt --mode all --stats
    rangehull verify --instances 50
    rangehull bench --points pts.txt --queries 1000

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 constraint violation.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import random
import re
import sys
import time

import numpy as np

from .chains import (QueryStats, complement_area_chain, query_all, query_area, query_count,
                     query_perimeter, query_report)
from .geom import COORD_LIMIT, CoordinateOutOfRange
from .oracle import oracle_query
from .rangetree import QueryRect, RangeHullTree

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_CONSTRAINT = 0, 1, 2, 3
DISTS = ("uniform", "circle", "clustered", "grid", "collinear")
MODES = ("report", "count", "area", "perimeter", "all")
MUTATIONS = {"pop-collinear": {"pop_collinear": False}, "bridge-single": {"bridge_single": False}}


class ParseError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")


# -- generation -------------------------------------------------------------

def generate(n: int, dist: str = "uniform", seed: int = 0, rng_range: int = 10**6) -> list:
    """``n`` integer points in [0, rng_range]^2, fully determined by ``seed``."""
    rnd = random.Random(seed)
    R = rng_range
    if dist == "uniform":
        return [(rnd.randint(0, R), rnd.randint(0, R)) for _ in range(n)]
    if dist == "circle":
        c, r = R // 2, R / 2
        out = []
        for _ in range(n):
            a = rnd.uniform(0, 2 * math.pi)
            out.append((round(c + r * math.cos(a)), round(c + r * math.sin(a))))
        return out
    if dist == "clustered":
        centers = [(rnd.randint(0, R), rnd.randint(0, R)) for _ in range(max(1, n // 100))]
        sigma = max(1.0, R / 50)
        out = []
        for _ in range(n):
            cx, cy = rnd.choice(centers)
            x = min(R, max(0, round(rnd.gauss(cx, sigma))))
            y = min(R, max(0, round(rnd.gauss(cy, sigma))))
            out.append((x, y))
        return out
    if dist == "grid":
        side = math.ceil(math.sqrt(n))
        step = max(1, R // max(1, side - 1)) if side > 1 else 1
        return [((k % side) * step, (k // side) * step) for k in range(n)]
    if dist == "collinear":
        dx, dy = rnd.choice([(1, 0), (0, 1), (1, 1), (2, 1), (1, -1)])
        oy = R if dy < 0 else 0
        tmax = R // max(abs(dx), abs(dy))
        return [(t * dx, oy + t * dy) for t in (rnd.randint(0, tmax) for _ in range(n))]
    raise ValueError(f"unknown distribution {dist!r}")


def write_points(points, out, header: str = "") -> None:
    if header:
        out.write(f"# {header}\n")
    for x, y in points:
        out.write(f"{x} {y}\n")


# -- parsing ----------------------------------------------------------------

_INT = re.compile(r"[+-]?\d+")


def _ints(line: str, k: int, path, lineno: int) -> tuple:
    toks = line.split()
    if len(toks) != k:
        raise ParseError(path, lineno, f"expected {k} integers, got {len(toks)} fields")
    for tok in toks:
        if not _INT.fullmatch(tok):
            raise ParseError(path, lineno, f"not an integer: {tok!r}")
    return tuple(int(tok) for tok in toks)


def read_records(path: str, k: int) -> list:
    out = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            s = line.split("#", 1)[0]
            if s.strip():
                out.append(_ints(s, k, path, lineno))
    return out


def read_points(path: str) -> list:
    return read_records(path, 2)


def read_queries(path: str) -> list:
    return [QueryRect(*r) for r in read_records(path, 4)]


# -- query ------------------------------------------------------------------

def answer(t, q: QueryRect, mode: str, with_stats: bool = False) -> dict:
    stats = QueryStats() if with_stats else None
    rec: dict = {}
    if t is None:
        res = {"count": 0, "area2": 0, "perimeter": 0.0, "hull": []}
    elif mode == "report":
        res = {"hull": query_report(t, q, stats)}
    elif mode == "count":
        res = {"count": query_count(t, q, stats)}
    elif mode == "perimeter":
        res = {"perimeter": query_perimeter(t, q, stats)}
    elif mode == "area":
        res = {"area2": query_area(t, q, stats).area2}
    else:
        res = query_all(t, q, stats)
    if mode in ("count", "all"):
        rec["count"] = res["count"]
    if mode in ("area", "all"):
        rec["area2"] = res["area2"]
        rec["area"] = res["area2"] / 2
    if mode in ("perimeter", "all"):
        rec["perimeter"] = res["perimeter"]
    if mode in ("report", "all"):
        rec["hull"] = [list(p) for p in res["hull"]]
    if stats is not None:
        rec["stats"] = stats.as_dict()
    return rec


def _load_tree(points):
    return RangeHullTree(points) if points else None


def cmd_query(args) -> int:
    try:
        points = read_points(args.points)
        queries = read_queries(args.queries)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        t = _load_tree(points)
    except CoordinateOutOfRange as e:
        print(f"constraint violation: {e}", file=sys.stderr)
        return EXIT_CONSTRAINT
    for q in queries:
        sys.stdout.write(json.dumps(answer(t, q, args.mode, args.stats)) + "\n")
    return EXIT_OK


# -- verification -----------------------------------------------------------

def degenerate_corpus() -> list:
    """Fixed hard cases: ties, repeats, straight lines, extreme coordinates."""
    L = COORD_LIMIT
    rnd = random.Random(7)
    corpus = [
        ("singleton", [(5, 5)]),
        ("duplicates", [(3, 3)] * 5 + [(1, 2)] * 3 + [(3, 3), (8, 0)]),
        ("horizontal", [(x, 7) for x in range(0, 60, 3)]),
        ("vertical", [(-4, y) for y in range(-30, 30, 2)]),
        ("diagonal", [(i, 2 * i) for i in range(-20, 21)]),
        ("antidiagonal", [(i, -i) for i in range(25)]),
        ("grid", [(x, y) for x in range(9) for y in range(9)]),
        ("grid-sparse", [(x * 5, y * 3) for x in range(6) for y in range(7) if (x + y) % 3]),
        ("clustered", [(rnd.randint(0, 4), rnd.randint(0, 4)) for _ in range(60)]
         + [(rnd.randint(100, 103), rnd.randint(50, 52)) for _ in range(60)]),
        ("square", [(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)]),
        ("extreme", [(-L, -L), (L, L), (-L, L), (L, -L), (0, 0), (L, 0), (0, -L)]),
        ("circle", generate(200, "circle", 3, 1000)),
        ("two-lines", [(x, 0) for x in range(10)] + [(x, 10) for x in range(10)]),
    ]
    for k in range(8):
        corpus.append((f"dense-{k}", [(rnd.randint(0, 6), rnd.randint(0, 6))
                                      for _ in range(rnd.randint(2, 50))]))
    return corpus


def random_rects(points, k: int, rnd: random.Random) -> list:
    xs = sorted({p[0] for p in points})
    ys = sorted({p[1] for p in points})
    lo_x, hi_x, lo_y, hi_y = xs[0], xs[-1], ys[0], ys[-1]
    out = [QueryRect(lo_x, hi_x, lo_y, hi_y), QueryRect(hi_x + 1, hi_x + 5, lo_y, hi_y)]
    while len(out) < k:
        kind = rnd.random()
        if kind < 0.5:
            # bounds on point coordinates exercise the inclusive edges
            a, b = sorted(rnd.choice(xs) for _ in range(2))
            c, d = sorted(rnd.choice(ys) for _ in range(2))
        else:
            a, b = sorted(rnd.randint(lo_x - 1, hi_x + 1) for _ in range(2))
            c, d = sorted(rnd.randint(lo_y - 1, hi_y + 1) for _ in range(2))
        out.append(QueryRect(a, b, c, d))
    return out[:k]


def check_query(t, points, q: QueryRect, merge_opts=None):
    """None when every query type agrees with the oracle on ``q``, else a message."""
    merge_opts = merge_opts or {}
    exp = oracle_query(points, q)
    try:
        got = query_all(t, q, **merge_opts)
    except Exception as e:  # any crash counts as a mismatch
        return f"raised {type(e).__name__}: {e}"
    if got["hull"] != exp["hull"]:
        return f"hull {got['hull']} != {exp['hull']}"
    if got["count"] != exp["count"]:
        return f"count {got['count']} != {exp['count']}"
    if got["area2"] != exp["area2"]:
        return f"area2 {got['area2']} != {exp['area2']}"
    if abs(got["perimeter"] - exp["perimeter"]) > 1e-9 * max(1.0, exp["perimeter"]):
        return f"perimeter {got['perimeter']!r} != {exp['perimeter']!r}"
    ext = got["extremes"]
    if ext is not None:
        comp = sum(complement_area_chain(c) for c in got["chains"])
        if comp != ext.box_area2() - exp["area2"]:
            return f"complements {comp} != box {ext.box_area2()} - area2 {exp['area2']}"
    return None


def _fails(points, q, merge_opts) -> bool:
    try:
        t = RangeHullTree(points)
    except Exception:
        return True
    return check_query(t, t.points, q, merge_opts) is not None


def shrink(points, q, merge_opts=None, budget: int = 400) -> list:
    """Greedy chunk removal keeping the failure alive."""
    pts = sorted(set(points))
    chunk = max(1, len(pts) // 2)
    tries = 0
    while chunk >= 1 and tries < budget:
        i, removed = 0, False
        while i < len(pts) and tries < budget:
            cand = pts[:i] + pts[i + chunk:]
            tries += 1
            if cand and _fails(cand, q, merge_opts):
                pts, removed = cand, True
            else:
                i += chunk
        if not removed:
            chunk //= 2
    return pts


def run_verify(n_max=512, instances=500, queries_per=50, seed=0, merge_opts=None,
               out=None, coord_range=10**6, max_reports=5) -> tuple:
    """Differential run over random and degenerate corpora; returns (checked, failures)."""
    out = out or sys.stdout
    rnd = random.Random(seed)
    corpus = []
    for k in range(instances):
        n = rnd.randint(1, n_max)
        corpus.append((f"random-{k}", [(rnd.randint(0, coord_range), rnd.randint(0, coord_range))
                                       for _ in range(n)]))
    corpus += degenerate_corpus()
    checked = failures = 0
    for label, pts in corpus:
        t = RangeHullTree(pts)
        for q in random_rects(t.points, queries_per, rnd):
            checked += 1
            msg = check_query(t, t.points, q, merge_opts)
            if msg is None:
                continue
            failures += 1
            if failures <= max_reports:
                small = shrink(t.points, q, merge_opts)
                print(f"FAIL {label} rect={tuple(q)}: {msg}", file=out)
                print(f"  repro points={small} rect={tuple(q)}", file=out)
    print(f"verify: {len(corpus)} instances, {checked} queries, {failures} failures", file=out)
    return checked, failures


def cmd_verify(args, merge_opts=None) -> int:
    if min(args.n_max, args.instances, args.queries_per) < 1:
        print("n-max, instances and queries-per must be >= 1", file=sys.stderr)
        return EXIT_CONSTRAINT
    if merge_opts is None and getattr(args, "mutate", None):
        merge_opts = MUTATIONS[args.mutate]
    _, failures = run_verify(args.n_max, args.instances, args.queries_per, args.seed, merge_opts)
    return EXIT_VERIFY if failures else EXIT_OK


# -- bench ------------------------------------------------------------------

def small_windows(points, k: int, seed: int, frac: float = 0.1) -> list:
    """Rectangles whose sides are at most ``frac`` of the bounding box sides."""
    rnd = random.Random(seed)
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    wmax, hmax = int((x1 - x0) * frac), int((y1 - y0) * frac)
    out = []
    for _ in range(k):
        w, h = rnd.randint(0, wmax), rnd.randint(0, hmax)
        a, c = rnd.randint(x0, x1 - w), rnd.randint(y0, y1 - h)
        out.append(QueryRect(a, a + w, c, c + h))
    return out


_FUNCS = {"report": query_report, "count": query_count, "area": query_area,
          "perimeter": query_perimeter}


def _timed(fn, queries, iters):
    lat = []
    for q in queries:
        for _ in range(iters):
            t0 = time.perf_counter()
            fn(q)
            lat.append(time.perf_counter() - t0)
    return np.array(lat)


def bench(t, queries, warmup: int = 1, iters: int = 1, modes=tuple(_FUNCS), oracle: bool = True) -> dict:
    res = {"n": t.n, "queries": len(queries), "build_seconds": t.build_seconds, "modes": {}}
    for mode in modes:
        fn = _FUNCS[mode]
        for q in queries[:warmup]:
            fn(t, q)
        lat = _timed(lambda q: fn(t, q), queries, iters)
        st = [QueryStats() for _ in queries]
        for q, s in zip(queries, st):
            fn(t, q, s)
        tangents = sum(s.tangent_calls for s in st)
        pushes = [p for s in st for p in s.chain_pushes]
        res["modes"][mode] = {
            "median_us": float(np.median(lat) * 1e6),
            "p99_us": float(np.percentile(lat, 99) * 1e6),
            "mean_orient": float(np.mean([s.orient_calls for s in st])),
            "mean_tangent_calls": float(np.mean([s.tangent_calls for s in st])),
            "mean_probes_per_tangent": sum(s.tangent_probes for s in st) / max(1, tangents),
            "mean_pushes_per_chain": float(np.mean(pushes)) if pushes else 0.0,
            "max_pushes_per_chain": max(pushes, default=0),
        }
    if oracle:
        lat = _timed(lambda q: oracle_query(t.points, q), queries, 1)
        med = float(np.median(lat) * 1e6)
        res["oracle"] = {"median_us": med, "p99_us": float(np.percentile(lat, 99) * 1e6)}
        for m in res["modes"].values():
            m["oracle_ratio"] = med / m["median_us"] if m["median_us"] else float("inf")
    return res


def format_bench(res: dict) -> str:
    cols = (("median_us", "median us"), ("p99_us", "p99 us"), ("mean_orient", "orients"),
            ("mean_tangent_calls", "tangents"), ("mean_probes_per_tangent", "probes/tan"),
            ("max_pushes_per_chain", "max push"), ("oracle_ratio", "vs oracle"))
    lines = [f"n={res['n']} queries={res['queries']} build={res['build_seconds']:.2f}s",
             f"{'mode':<10}" + "".join(f"{h:>12}" for _, h in cols)]
    for mode, m in res["modes"].items():
        lines.append(f"{mode:<10}" + "".join(f"{m.get(c, float('nan')):>12.2f}" for c, _ in cols))
    if "oracle" in res:
        o = res["oracle"]
        lines.append(f"{'oracle':<10}{o['median_us']:>12.2f}{o['p99_us']:>12.2f}")
    return "\n".join(lines)


def cmd_bench(args) -> int:
    try:
        points = read_points(args.points)
        if os.path.exists(args.queries):
            queries = read_queries(args.queries)
        elif args.queries.isdigit():
            queries = small_windows(points, int(args.queries), args.seed)
        else:
            print(f"no queries file {args.queries!r}", file=sys.stderr)
            return EXIT_PARSE
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        t = RangeHullTree(points)
    except CoordinateOutOfRange as e:
        print(f"constraint violation: {e}", file=sys.stderr)
        return EXIT_CONSTRAINT
    res = bench(t, queries, args.warmup, args.iters)
    if args.out:
        with open(args.out, "w") as f:
            json.dump(res, f, indent=2)
    print(json.dumps(res) if args.json else format_bench(res))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 1 or not 0 <= args.range <= COORD_LIMIT:
        print("need n >= 1 and 0 <= range <= 2^30", file=sys.stderr)
        return EXIT_CONSTRAINT
    pts = generate(args.n, args.dist, args.seed, args.range)
    header = f"gen n={args.n} dist={args.dist} seed={args.seed} range={args.range}"
    if args.out and args.out != "-":
        with open(args.out, "w") as f:
            write_points(pts, f, header)
    else:
        write_points(pts, sys.stdout, header)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rangehull", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write a random point set")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dist", choices=DISTS, default="uniform")
    g.add_argument("--range", type=int, default=10**6, help="coordinates fall in [0, range]")
    g.add_argument("--out", default="-")

    q = sub.add_parser("query", help="answer rectangle queries as JSON lines")
    q.add_argument("--points", required=True)
    q.add_argument("--queries", required=True)
    q.add_argument("--mode", choices=MODES, default="all")
    q.add_argument("--stats", action="store_true", help="attach per-query counters")
    q.add_argument("--json", action="store_true", help="JSON lines (the only format; accepted for scripts)")

    v = sub.add_parser("verify", help="differential check against the brute-force oracle")
    v.add_argument("--n-max", type=int, default=512)
    v.add_argument("--instances", type=int, default=500)
    v.add_argument("--queries-per", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--mutate", choices=sorted(MUTATIONS),
                   help="plant a known merge bug; verification should then fail")

    b = sub.add_parser("bench", help="latency and operation counts, with oracle comparison")
    b.add_argument("--points", required=True)
    b.add_argument("--queries", default="1000", help="queries file, or a count of random small windows")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--warmup", type=int, default=10)
    b.add_argument("--iters", type=int, default=1)
    b.add_argument("--json", action="store_true", help="print JSON instead of the table")
    b.add_argument("--out", help="also write the JSON report here")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd = {"gen": cmd_gen, "query": cmd_query, "verify": cmd_verify, "bench": cmd_bench}[args.cmd]
    return cmd(args)


if __name__ == "__main__":
    sys.exit(main())
