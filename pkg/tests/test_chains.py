import math
import random

import pytest

from rangehull.chains import (ChainResult, HullStackEntry, QueryStats, build_chain,
                              complement_area_chain, count_chain, extremes, merge_step,
                              perimeter_chain, query_all, query_area, query_count,
                              query_perimeter, query_report, report_chain)
from rangehull.geom import QUADRANTS, Quadrant, build_hull, dist, strict_arc, tri2
from rangehull.oracle import oracle_query
from rangehull.rangetree import QueryRect, build_tree

Q1 = Quadrant.Q1
EVERYTHING = QueryRect(-10**7, 10**7, -10**7, 10**7)


def entry(pts, q=Q1):
    return HullStackEntry(strict_arc(build_hull(pts), q), (-1, -1))


def chain_of(*point_sets):
    c = ChainResult(Q1)
    for pts in point_sets:
        merge_step(c.hs, c.ts, entry(pts))
    return c


def test_first_push():
    hs, ts = [], []
    merge_step(hs, ts, entry([(1, 2), (3, 0)]))
    assert len(hs) == 1 and ts == []


def test_single_bridge_push():
    c = chain_of([(4, 0)], [(0, 4)])
    assert len(c.hs) == 2 and [tuple(t) for t in c.ts] == [(0, 0)]
    assert report_chain(c) == [(0, 4), (4, 0)]
    assert perimeter_chain(c) == pytest.approx(math.sqrt(32))


def test_pop_on_inner_hull():
    st = QueryStats()
    c = ChainResult(Q1)
    for pts in ([(6, 0)], [(4, 1)], [(0, 6)]):
        merge_step(c.hs, c.ts, entry(pts), st)
    assert [e.arc.points() for e in c.hs] == [[(6, 0)], [(0, 6)]]
    assert len(c.ts) == 1
    assert st.pops == 1 and st.pushes == 3
    assert report_chain(c) == [(0, 6), (6, 0)]


def test_collinear_middle_hull_is_popped():
    c = chain_of([(6, 0)], [(3, 3)], [(0, 6)])
    assert report_chain(c) == [(0, 6), (6, 0)]
    assert count_chain(c) == 2


def test_empty_and_singleton_chains():
    c = ChainResult(Q1)
    assert c.empty and report_chain(c) == [] and count_chain(c) == 0
    assert perimeter_chain(c) == 0.0 and complement_area_chain(c) == 0
    c = chain_of([(2, 2)])
    assert report_chain(c) == [(2, 2)] and count_chain(c) == 1
    assert perimeter_chain(c) == 0.0 and complement_area_chain(c) == 0


def test_complement_of_single_edge():
    c = chain_of([(4, 2)], [(2, 4)])
    assert complement_area_chain(c, (4, 4)) == 4
    assert complement_area_chain(c) == 4


def test_extremes():
    t = build_tree([(0, 0), (4, 0), (4, 4), (0, 4)])
    ext = extremes(t, EVERYTHING)
    assert ext.xmax == (4, 4) and ext.ymax == (4, 4)
    assert ext.xmin == (0, 0) and ext.ymin == (0, 0)
    assert ext.start[Quadrant.Q2] == (0, 4) and ext.end[Quadrant.Q2] == (0, 4)
    assert ext.start[Quadrant.Q4] == (4, 0) and ext.end[Quadrant.Q4] == (4, 0)
    assert extremes(t, QueryRect(5, 9, 0, 9)) is None
    one = extremes(t, QueryRect(4, 4, 0, 0))
    assert set(one.start.values()) == set(one.end.values()) == {(4, 0)}


def test_build_chain_edge_cases():
    t = build_tree([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert build_chain(t, QueryRect(5, 9, 0, 9), Q1).empty
    c = build_chain(t, QueryRect(4, 4, 0, 0), Q1)
    assert len(c.hs) == 1 and c.ts == [] and c.hs[0].arc.points() == [(4, 0)]


def test_square():
    t = build_tree([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])
    assert query_report(t, EVERYTHING) == [(4, 4), (0, 4), (0, 0), (4, 0)]
    assert query_count(t, EVERYTHING) == 4
    assert query_perimeter(t, EVERYTHING) == 16.0
    assert query_area(t, EVERYTHING).area2 == 32


def test_unit_square_perimeter():
    t = build_tree([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert query_perimeter(t, EVERYTHING) == 4.0


def test_small_conventions():
    t = build_tree([(0, 0), (3, 4)])
    assert query_report(t, EVERYTHING) == [(3, 4), (0, 0)]
    assert query_perimeter(t, EVERYTHING) == 10.0
    assert query_area(t, EVERYTHING) == (2, 0, 10.0, extremes(t, EVERYTHING))
    assert query_all(t, QueryRect(0, 0, 0, 0))["hull"] == [(0, 0)]
    res = query_all(t, QueryRect(1, 2, 0, 9))
    assert (res["count"], res["area2"], res["perimeter"], res["hull"]) == (0, 0, 0.0, [])


def test_collinear_set():
    t = build_tree([(i, 3 * i) for i in range(10)])
    assert query_report(t, EVERYTHING) == [(9, 27), (0, 0)]
    assert query_area(t, EVERYTHING).area2 == 0


def test_diamond_area():
    t = build_tree([(2, 0), (4, 2), (2, 4), (0, 2)])
    res = query_all(t, EVERYTHING)
    assert res["area2"] == 16
    assert res["extremes"].box_area2() == 32
    assert [complement_area_chain(c) for c in res["chains"]] == [4, 4, 4, 4]
    assert res["perimeter"] == pytest.approx(4 * math.sqrt(8))


def test_quadrilateral_area():
    t = build_tree([(1, 0), (4, 1), (2, 4), (0, 2)])
    res = query_all(t, EVERYTHING)
    assert res["area2"] == 17
    assert res["extremes"].box_area2() == 32
    assert [complement_area_chain(c) for c in res["chains"]] == [6, 4, 2, 3]
    assert query_area(t, EVERYTHING).area == 8.5


def quadrant_run(hull, q):
    """Oracle hull vertices of quadrant q's chain, from its y'-extreme end back to its x'-extreme end."""
    if not hull:
        return []
    fx = lambda p: (q.sx * p[0], q.sy * p[1])
    s = max(range(len(hull)), key=lambda i: fx(hull[i]))
    e = max(range(len(hull)), key=lambda i: (fx(hull[i])[1], fx(hull[i])[0]))
    step = 1 if q.sx * q.sy > 0 else -1
    run = [hull[s]]
    i = s
    while i != e:
        i = (i + step) % len(hull)
        run.append(hull[i])
    return run[::-1]


def test_chains_match_oracle_runs():
    rnd = random.Random(21)
    for R in (8, 10**6):
        pts = [(rnd.randint(0, R), rnd.randint(0, R)) for _ in range(256)]
        t = build_tree(pts)
        for _ in range(200):
            a, b = sorted(rnd.randint(0, R) for _ in range(2))
            c, d = sorted(rnd.randint(0, R) for _ in range(2))
            q = QueryRect(a, b, c, d)
            hull = oracle_query(t.points, q)["hull"]
            for quad in QUADRANTS:
                st = QueryStats()
                ch = build_chain(t, q, quad, st)
                pts_out = report_chain(ch, st)
                assert pts_out == quadrant_run(hull, quad)
                assert count_chain(ch) == len(pts_out)
                poly = sum(dist(u, v) for u, v in zip(pts_out, pts_out[1:]))
                assert perimeter_chain(ch) == pytest.approx(poly, rel=1e-9, abs=1e-9)
                assert len(ch.ts) == max(0, len(ch.hs) - 1)
                assert st.pops <= st.pushes


def test_junctions_turn_left():
    rnd = random.Random(22)
    for _ in range(40):
        pts = [(rnd.randint(0, 1000), rnd.randint(0, 1000)) for _ in range(300)]
        t = build_tree(pts)
        for quad in QUADRANTS:
            ch = build_chain(t, QueryRect(100, 900, 100, 900), quad)
            out = report_chain(ch)[::-1]
            sgn = quad.sx * quad.sy
            for u, v, w in zip(out, out[1:], out[2:]):
                assert sgn * tri2(u, v, w) > 0


def test_query_all_agrees_with_single_queries():
    rnd = random.Random(23)
    pts = [(rnd.randint(0, 100), rnd.randint(0, 100)) for _ in range(400)]
    t = build_tree(pts)
    for _ in range(100):
        a, b = sorted(rnd.randint(0, 100) for _ in range(2))
        c, d = sorted(rnd.randint(0, 100) for _ in range(2))
        q = QueryRect(a, b, c, d)
        res = query_all(t, q)
        assert res["hull"] == query_report(t, q)
        assert res["count"] == query_count(t, q) == len(res["hull"])
        assert res["perimeter"] == query_perimeter(t, q)
        assert res["area2"] == query_area(t, q).area2
