"""Brute-force references for differential testing.

Nothing here reuses the geometry helpers of the index: hulls come from gift
wrapping rather than a monotone chain, and all arithmetic is written out
inline.  Conventions (vertices only, CCW from the max-y vertex with ties to
larger x, closed-tour perimeter) match the index so answers compare exactly.
"""
from __future__ import annotations

import math


class NoTangent(ValueError):
    pass


def oracle_filter(points, q) -> list:
    x_lo, x_hi, y_lo, y_hi = q
    return [p for p in points if x_lo <= p[0] <= x_hi and y_lo <= p[1] <= y_hi]


def oracle_hull(points) -> list:
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if len(pts) <= 1:
        return pts
    start = min(pts, key=lambda p: (p[1], p[0]))
    hull = [start]
    cur = start
    while True:
        best = None
        for p in pts:
            if p == cur:
                continue
            if best is None:
                best = p
                continue
            c = (best[0] - cur[0]) * (p[1] - cur[1]) - (best[1] - cur[1]) * (p[0] - cur[0])
            if c < 0:
                best = p
            elif c == 0:
                d_best = (best[0] - cur[0]) ** 2 + (best[1] - cur[1]) ** 2
                d_p = (p[0] - cur[0]) ** 2 + (p[1] - cur[1]) ** 2
                if d_p > d_best:
                    best = p
        if best == start:
            break
        hull.append(best)
        cur = best
    k = max(range(len(hull)), key=lambda i: (hull[i][1], hull[i][0]))
    return hull[k:] + hull[:k]


def oracle_measures(hull_seq) -> dict:
    h = len(hull_seq)
    area2 = 0
    perimeter = 0.0
    for i in range(h):
        x1, y1 = hull_seq[i]
        x2, y2 = hull_seq[(i + 1) % h]
        area2 += x1 * y2 - x2 * y1
        perimeter += math.hypot(x2 - x1, y2 - y1)
    if h <= 2:
        area2 = 0
    return {"count": h, "area2": abs(area2), "perimeter": perimeter}


def oracle_query(points, q) -> dict:
    hull = oracle_hull(oracle_filter(points, q))
    out = oracle_measures(hull)
    out["hull"] = hull
    return out


def tangent_oracle(arc_a, arc_b) -> tuple:
    """Exhaustive search for the bridge between two arcs of one quadrant frame.

    Among collinear candidates the pair with the earliest point on ``arc_a``
    and the latest on ``arc_b`` is returned.
    """
    sx, sy = arc_a.quadrant.value
    sgn = sx * sy
    A = arc_a.points()
    B = arc_b.points()
    every = A + B
    for i1 in range(len(A)):
        for i2 in range(len(B) - 1, -1, -1):
            px, py = A[i1]
            qx, qy = B[i2]
            if all(sgn * ((qx - px) * (vy - py) - (qy - py) * (vx - px)) >= 0 for vx, vy in every):
                return (i1, i2)
    raise NoTangent("no common supporting line with both arcs on its left")
