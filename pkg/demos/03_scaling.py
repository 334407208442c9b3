# How query cost grows with n, against a scan of all points.
# Runs in well under a minute; the largest tree holds about 2^17 points.
# The first build also pays for loading the compiled build kernels.

import random
import statistics
import time

from rangehull import QueryRect, QueryStats, RangeHullTree, oracle_query, query_report

R = 10**6


def windows(k, seed):
    rnd = random.Random(seed)
    out = []
    for _ in range(k):
        w, h = rnd.randint(0, R // 10), rnd.randint(0, R // 10)
        x, y = rnd.randint(0, R - w), rnd.randint(0, R - h)
        out.append(QueryRect(x, x + w, y, y + h))
    return out


def median_ms(fn, qs):
    lat = []
    for q in qs:
        t0 = time.perf_counter()
        fn(q)
        lat.append(time.perf_counter() - t0)
    return 1e3 * statistics.median(lat)


print(f"{'n':>8} {'build s':>8} {'index ms':>9} {'scan ms':>8} {'pushes':>7}")
for e in (10, 13, 15, 17):
    rnd = random.Random(e)
    pts = [(rnd.randint(0, R), rnd.randint(0, R)) for _ in range(1 << e)]
    t = RangeHullTree(pts)
    qs = windows(200, e)
    ours = median_ms(lambda q: query_report(t, q), qs)
    scan = median_ms(lambda q: oracle_query(t.points, q), qs[:50])
    st = QueryStats()
    for q in qs:
        query_report(t, q, st)
    print(f"{t.n:>8} {t.build_seconds:>8.2f} {ours:>9.3f} {scan:>8.2f} {st.pushes / len(qs):>7.1f}")
