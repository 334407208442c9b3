"""Exact planar primitives and canonical convex hulls.

Points are plain ``(x, y)`` tuples of Python ints.  Every predicate is
evaluated in integer arithmetic, so results never depend on rounding.
"""
from __future__ import annotations

import enum
import math
from typing import Iterable, Sequence

COORD_LIMIT = 1 << 30

Point = tuple  # (x, y), both ints with |coord| <= COORD_LIMIT


class EmptyInput(ValueError):
    pass


class CoordinateOutOfRange(ValueError):
    pass


def check_coords(points: Iterable[Point]) -> None:
    for x, y in points:
        if not (-COORD_LIMIT <= x <= COORD_LIMIT and -COORD_LIMIT <= y <= COORD_LIMIT):
            raise CoordinateOutOfRange(f"point ({x}, {y}) outside +/-2^30")


def tri2(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient(a: Point, b: Point, c: Point) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def dist(a: Point, b: Point) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    return math.sqrt(dx * dx + dy * dy)


class Quadrant(enum.Enum):
    """Monotone hull chain, tagged with the reflection that maps it onto Q1.

    In reflected coordinates ``(sx*x, sy*y)`` every chain runs counter-clockwise
    from its max-x vertex to its max-y vertex with x falling and y rising.
    """

    Q1 = (1, 1)
    Q2 = (-1, 1)
    Q3 = (-1, -1)
    Q4 = (1, -1)

    @property
    def sx(self) -> int:
        return self.value[0]

    @property
    def sy(self) -> int:
        return self.value[1]

    def to_frame(self, p: Point) -> Point:
        return (self.sx * p[0], self.sy * p[1])


QUADRANTS = (Quadrant.Q1, Quadrant.Q2, Quadrant.Q3, Quadrant.Q4)


class CanonicalHull:
    """Convex hull of one canonical subset plus its auxiliary arrays.

    Vertices run counter-clockwise from the max-y vertex (ties: larger x).
    The hull either owns small Python lists or views into the packed buffers
    of a built tree; ``off`` and ``poff`` locate it inside those buffers.

    ``prefix_cross`` is taken relative to ``verts[0]``: entry ``i`` is
    ``sum(cross(v[k]-v[0], v[k+1]-v[0]) for k < i)``, so the full-cycle total
    is twice the area and every entry is non-negative.  Packed buffers keep it
    as wrapping int64; reads restore the true value.
    """

    __slots__ = ("xs", "ys", "off", "n", "idx_xmax", "idx_xmin", "idx_ymin",
                 "pp", "pc", "poff", "node")

    def __init__(self, xs, ys, off, n, idx_xmax, idx_xmin, idx_ymin, pp, pc, poff, node=-1):
        self.xs = xs
        self.ys = ys
        self.off = off
        self.n = n
        self.idx_xmax = idx_xmax
        self.idx_xmin = idx_xmin
        self.idx_ymin = idx_ymin
        self.pp = pp
        self.pc = pc
        self.poff = poff
        self.node = node

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"CanonicalHull({self.verts!r})"

    def vertex(self, i: int) -> Point:
        j = self.off + i
        return (self.xs[j], self.ys[j])

    @property
    def verts(self) -> list:
        return [self.vertex(i) for i in range(self.n)]

    @property
    def pmax(self) -> Point:
        return self.vertex(self.idx_xmax)

    @property
    def prefix_perim(self) -> list:
        return [self.pp[self.poff + i] for i in range(self.n + 1)]

    @property
    def prefix_cross(self) -> list:
        return [self.cross_at(i) for i in range(self.n + 1)]

    def cross_at(self, i: int) -> int:
        v = self.pc[self.poff + i]
        return v + (1 << 64) if v < 0 else v

    def area2(self) -> int:
        return self.cross_at(self.n)

    def perimeter(self) -> float:
        return self.pp[self.poff + self.n]

    def perim_between(self, p: int, q: int) -> float:
        """Length of the counter-clockwise boundary walk from position p to q."""
        pp, o = self.pp, self.poff
        if q >= p:
            return pp[o + q] - pp[o + p]
        return pp[o + self.n] - pp[o + p] + pp[o + q]

    def pocket2(self, p: int, q: int) -> int:
        """Twice the area cut off by chord q->p from the CCW walk p..q."""
        if p == q:
            return 0
        if q >= p:
            s = self.cross_at(q) - self.cross_at(p)
        else:
            s = self.cross_at(self.n) - self.cross_at(p) + self.cross_at(q)
        o = self.off
        x0, y0 = self.xs[o], self.ys[o]
        xq, yq = self.xs[o + q] - x0, self.ys[o + q] - y0
        xp, yp = self.xs[o + p] - x0, self.ys[o + p] - y0
        return s + xq * yp - yq * xp


def _monotone_hull(pts: list) -> list:
    """Strict CCW hull of distinct points sorted by (x, y)."""
    if len(pts) <= 2:
        return list(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and tri2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and tri2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def extreme_indices(verts: Sequence[Point]) -> tuple:
    """Positions of (max-x/larger y, min-x/smaller y, min-y/smaller x)."""
    ixmax = max(range(len(verts)), key=lambda i: (verts[i][0], verts[i][1]))
    ixmin = min(range(len(verts)), key=lambda i: (verts[i][0], verts[i][1]))
    iymin = min(range(len(verts)), key=lambda i: (verts[i][1], verts[i][0]))
    return ixmax, ixmin, iymin


def hull_from_vertices(verts: Sequence[Point]) -> CanonicalHull:
    """Wrap an already-normalized CCW vertex cycle (position 0 = max-y)."""
    verts = list(verts)
    n = len(verts)
    xs = [p[0] for p in verts]
    ys = [p[1] for p in verts]
    pp = [0.0] * (n + 1)
    pc = [0] * (n + 1)
    x0, y0 = xs[0], ys[0]
    for k in range(n):
        a, b = verts[k], verts[(k + 1) % n]
        pp[k + 1] = pp[k] + dist(a, b)
        pc[k + 1] = pc[k] + (a[0] - x0) * (b[1] - y0) - (a[1] - y0) * (b[0] - x0)
    if n == 1:
        pp[1] = 0.0
    ixmax, ixmin, iymin = extreme_indices(verts)
    return CanonicalHull(xs, ys, 0, n, ixmax, ixmin, iymin, pp, pc, 0)


def build_hull(points: Iterable[Point]) -> CanonicalHull:
    pts = sorted(set(map(tuple, points)))
    if not pts:
        raise EmptyInput("build_hull needs at least one point")
    cyc = _monotone_hull(pts)
    top = max(range(len(cyc)), key=lambda i: (cyc[i][1], cyc[i][0]))
    return hull_from_vertices(cyc[top:] + cyc[:top])


class ArcView:
    """Contiguous run of hull positions walked from ``start`` in steps of +/-1.

    Index 0 is the chain's x-extreme end and ``length - 1`` its y-extreme end,
    both measured in the quadrant's reflected frame.
    """

    __slots__ = ("hull", "quadrant", "start", "step", "length")

    def __init__(self, hull: CanonicalHull, quadrant: Quadrant, start: int, step: int, length: int):
        self.hull = hull
        self.quadrant = quadrant
        self.start = start
        self.step = step
        self.length = length

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"ArcView({self.quadrant.name}, {self.points()!r})"

    def pos(self, k: int) -> int:
        return (self.start + self.step * k) % self.hull.n

    def point(self, k: int) -> Point:
        h = self.hull
        j = h.off + (self.start + self.step * k) % h.n
        return (h.xs[j], h.ys[j])

    @property
    def positions(self) -> list:
        return [self.pos(k) for k in range(self.length)]

    def points(self) -> list:
        return [self.point(k) for k in range(self.length)]

    def perim(self, k1: int, k2: int) -> float:
        """Boundary length between arc indices k1 <= k2."""
        if k1 == k2:
            return 0.0
        p, q = self.pos(k1), self.pos(k2)
        if self.step < 0:
            p, q = q, p
        return self.hull.perim_between(p, q)

    def pocket2(self, k1: int, k2: int) -> int:
        """Twice the area between the arc k1..k2 and its chord, in original orientation.

        Positive when the arc runs counter-clockwise on the hull (step +1),
        negative when it runs clockwise.
        """
        if k1 == k2:
            return 0
        p, q = self.pos(k1), self.pos(k2)
        if self.step > 0:
            return self.hull.pocket2(p, q)
        return -self.hull.pocket2(q, p)


def _arc_length(start: int, end: int, step: int, n: int) -> int:
    return ((end - start) * step) % n + 1


def arc_view(h: CanonicalHull, q: Quadrant) -> ArcView:
    """The quadrant's arc with shared endpoints at the stored extreme vertices."""
    n = h.n
    if q is Quadrant.Q1:
        s, e, step = h.idx_xmax, 0, 1
    elif q is Quadrant.Q2:
        s, e, step = h.idx_xmin, 0, -1
    elif q is Quadrant.Q3:
        s, e, step = h.idx_xmin, h.idx_ymin, 1
    else:
        s, e, step = h.idx_xmax, h.idx_ymin, -1
    return ArcView(h, q, s, step, _arc_length(s, e, step, n))


def strict_arc(h: CanonicalHull, q: Quadrant) -> ArcView:
    """The quadrant's strictly monotone arc used for chain building.

    Extremes are broken symmetrically in the reflected frame (max x' with
    larger y', max y' with larger x'), so the Q2 and Q4 arcs drop axis-parallel
    extreme edges that ``arc_view`` keeps.
    """
    n = h.n
    if n == 1:
        return ArcView(h, q, 0, 1, 1)
    o, xs, ys = h.off, h.xs, h.ys
    if q is Quadrant.Q1:
        s, e, step = h.idx_xmax, 0, 1
    elif q is Quadrant.Q3:
        s, e, step = h.idx_xmin, h.idx_ymin, 1
    elif q is Quadrant.Q2:
        s = h.idx_xmin
        t = (s - 1) % n
        if xs[o + t] == xs[o + s]:
            s = t
        e = 1 if ys[o + 1] == ys[o] else 0
        step = -1
    else:
        s = h.idx_xmax
        t = (s - 1) % n
        if xs[o + t] == xs[o + s]:
            s = t
        e = h.idx_ymin
        t = (e + 1) % n
        if ys[o + t] == ys[o + e]:
            e = t
        step = -1
    return ArcView(h, q, s, step, _arc_length(s, e, step, n))
