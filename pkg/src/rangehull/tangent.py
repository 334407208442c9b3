"""Bridge between two separated monotone hull arcs.

Both arcs live in one quadrant frame: x' falling and y' rising along each arc,
and every vertex of the earlier arc has y' no larger than any vertex of the
later arc.  The bridge ``(i1, i2)`` is the pair with every vertex of both arcs
on the closed left side of ``a[i1] -> b[i2]``.  Among collinear candidates the
longest segment wins, so no chain vertex ever sits in the middle of a straight
run.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .geom import ArcView, tri2


class NotSeparated(ValueError):
    pass


class TangentRecord(NamedTuple):
    i1: int
    i2: int


class Separation(NamedTuple):
    """Horizontal line y' = value (frame coordinates) between two arcs."""

    axis: str
    value: int


def tangent_probe_budget(n1: int, n2: int) -> int:
    return 8 * (math.ceil(math.log2(n1 + 1)) + math.ceil(math.log2(n2 + 1))) + 16


def separation(a: ArcView, b: ArcView) -> Separation:
    sy = a.quadrant.sy
    top = sy * a.point(a.length - 1)[1]
    bottom = sy * b.point(0)[1]
    if top > bottom:
        raise NotSeparated(f"arc tops at y'={top} but next arc starts at y'={bottom}")
    return Separation("horizontal", top)


def supporting_tangent(a: ArcView, b: ArcView, stats=None, check: bool = False) -> TangentRecord:
    """Simultaneous binary search over both arcs; O(log|a| + log|b|) probes."""
    q = a.quadrant
    sx, sy = q.sx, q.sy
    sgn = sx * sy
    na, nb = a.length, b.length
    if check:
        separation(a, b)
    m = sy * a.point(na - 1)[1]
    pa, pb = a.point, b.point
    lo_a, hi_a, lo_b, hi_b = 0, na - 1, 0, nb - 1
    probes = 0
    while True:
        if lo_a > hi_a or lo_b > hi_b:
            raise NotSeparated("bridge search left its ranges; arcs are not separated")
        i = (lo_a + hi_a) >> 1
        j = (lo_b + hi_b) >> 1
        P = pa(i)
        Q = pb(j)
        a_left = a_right = b_left = b_right = False
        if i > 0:
            probes += 1
            a_left = sgn * tri2(P, Q, pa(i - 1)) <= 0
        if not a_left and i < na - 1:
            probes += 1
            a_right = sgn * tri2(P, Q, pa(i + 1)) < 0
        if j < nb - 1:
            probes += 1
            b_right = sgn * tri2(P, Q, pb(j + 1)) <= 0
        if not b_right and j > 0:
            probes += 1
            b_left = sgn * tri2(P, Q, pb(j - 1)) < 0
        if a_left or b_right:
            if a_left:
                hi_a = i - 1
            if b_right:
                lo_b = j + 1
            continue
        if not a_right and not b_left:
            break
        if not a_right:
            hi_b = j - 1
        elif not b_left:
            lo_a = i + 1
        else:
            # Both contact points lie toward the separator: locate where the
            # supporting edge lines cross relative to y' = m.
            P2 = pa(i + 1)
            P3 = pb(j - 1)
            d1x, d1y = sx * (P2[0] - P[0]), sy * (P2[1] - P[1])
            d2x, d2y = sx * (Q[0] - P3[0]), sy * (Q[1] - P3[1])
            ex, ey = sx * (P3[0] - P[0]), sy * (P3[1] - P[1])
            den = d1x * d2y - d1y * d2x
            num = ex * d2y - ey * d2x
            side = ((sy * P[1] - m) * den + num * d1y) * (1 if den > 0 else -1)
            if side <= 0:
                lo_a = i + 1
            else:
                hi_b = j - 1
    if stats is not None:
        stats.tangent_calls += 1
        stats.tangent_probes += probes
        stats.orient_calls += probes
        stats.max_probe_excess = max(stats.max_probe_excess, probes - tangent_probe_budget(na, nb))
    return TangentRecord(i, j)


def tangent_linear(a: ArcView, b: ArcView) -> TangentRecord:
    """Two-pointer walk from the separator outward; O(|a| + |b|) cross-check."""
    sgn = a.quadrant.sx * a.quadrant.sy
    i, j = a.length - 1, 0
    moved = True
    while moved:
        moved = False
        while j < b.length - 1 and sgn * tri2(a.point(i), b.point(j), b.point(j + 1)) <= 0:
            j += 1
            moved = True
        while i > 0 and sgn * tri2(a.point(i), b.point(j), a.point(i - 1)) <= 0:
            i -= 1
            moved = True
    return TangentRecord(i, j)
