"""Query engine: quadrant chains built by hull-level Graham merging.

Each of the four monotone hull chains is built in its own reflected frame
where it runs from the max-x' vertex up to the max-y' vertex.  Canonical
hulls are fed in increasing y' order; the merge keeps a hull stack and the
bridges between stack neighbours, and every extractor (report, count,
perimeter, complement area) reads the answer off those two stacks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .geom import QUADRANTS, ArcView, Quadrant, dist, strict_arc, tri2
from .rangetree import QueryRect, RangeHullTree
from .tangent import TangentRecord, supporting_tangent


@dataclass
class QueryStats:
    orient_calls: int = 0
    tangent_calls: int = 0
    tangent_probes: int = 0
    pushes: int = 0
    pops: int = 0
    canonical_nodes_visited: int = 0
    report_touches: int = 0
    max_probe_excess: int = -(1 << 30)
    chain_pushes: list = field(default_factory=list)
    chain_sizes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "orient_calls": self.orient_calls,
            "tangent_calls": self.tangent_calls,
            "tangent_probes": self.tangent_probes,
            "pushes": self.pushes,
            "pops": self.pops,
            "canonical_nodes_visited": self.canonical_nodes_visited,
        }


class HullStackEntry(NamedTuple):
    arc: ArcView
    provenance: tuple  # (primary order, secondary order); -1 for seed/terminal leaves


@dataclass
class ChainResult:
    quadrant: Quadrant
    hs: list = field(default_factory=list)
    ts: list = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.hs

    def segments(self):
        """(arc, first index, last index) for each hull's contribution, S to E."""
        hs, ts = self.hs, self.ts
        last = len(hs) - 1
        for k, e in enumerate(hs):
            a = 0 if k == 0 else ts[k - 1].i2
            b = e.arc.length - 1 if k == last else ts[k].i1
            yield e.arc, a, b

    @property
    def start(self):
        return self.hs[0].arc.point(0)

    @property
    def end(self):
        arc = self.hs[-1].arc
        return arc.point(arc.length - 1)


@dataclass
class Extremes:
    """Per-quadrant chain endpoints of P within a rectangle.

    ``start[q]`` is the max-x' point (ties: larger y') and ``end[q]`` the
    max-y' point (ties: larger x') in quadrant q's reflected frame.
    """

    start: dict
    end: dict

    @property
    def xmax(self):
        return self.start[Quadrant.Q1]

    @property
    def ymax(self):
        return self.end[Quadrant.Q1]

    @property
    def xmin(self):
        return self.start[Quadrant.Q3]

    @property
    def ymin(self):
        return self.end[Quadrant.Q3]

    def box_area2(self) -> int:
        return 2 * (self.xmax[0] - self.xmin[0]) * (self.ymax[1] - self.ymin[1])


class AggregateResult(NamedTuple):
    count: int
    area2: int
    perimeter: float
    extremes: Optional[Extremes]

    @property
    def area(self) -> float:
        return self.area2 / 2


_FRAMES = [(q, q.sx, q.sy) for q in QUADRANTS]


def extremes(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None) -> Optional[Extremes]:
    """Chain endpoints for all four quadrants, or None when P ∩ q is empty.

    Scans every canonical hull of the query once; each hull offers its own
    arc endpoints as candidates, so the cost is O(log^2 n).
    """
    best_s: dict = {}
    best_e: dict = {}
    for v in t.decompose_x(q.x_lo, q.x_hi):
        for w in t.decompose_y(v, q.y_lo, q.y_hi):
            h = t.hull(w.id)
            if stats is not None:
                stats.canonical_nodes_visited += 1
            for quad, sx, sy in _FRAMES:
                arc = strict_arc(h, quad)
                s = arc.point(0)
                e = arc.point(arc.length - 1)
                ks = (sx * s[0], sy * s[1])
                ke = (sy * e[1], sx * e[0])
                cur = best_s.get(quad)
                if cur is None or ks > cur[0]:
                    best_s[quad] = (ks, s)
                cur = best_e.get(quad)
                if cur is None or ke > cur[0]:
                    best_e[quad] = (ke, e)
    if not best_s:
        return None
    return Extremes({k: v[1] for k, v in best_s.items()}, {k: v[1] for k, v in best_e.items()})


def merge_step(hs: list, ts: list, incoming: HullStackEntry, stats: Optional[QueryStats] = None,
               pop_collinear: bool = True, bridge_single: bool = True) -> None:
    """Push ``incoming`` after popping every stack hull it makes redundant.

    The two keyword switches exist only so tests can plant the classic
    mistakes (keeping collinear hulls, dropping the first bridge) and check
    that verification catches them.
    """
    c3 = incoming.arc
    sgn = c3.quadrant.sx * c3.quadrant.sy
    while len(hs) >= 2:
        c1 = hs[-2].arc
        c2 = hs[-1].arc
        t1 = ts[-1]
        t2 = supporting_tangent(c2, c3, stats)
        pa = c1.point(t1.i1)
        pb = c2.point(t1.i2)
        pd = c3.point(t2.i2)
        turn = sgn * tri2(pa, pb, pd)
        if stats is not None:
            stats.orient_calls += 1
        if turn < 0 or (turn == 0 and pop_collinear):
            hs.pop()
            ts.pop()
            if stats is not None:
                stats.pops += 1
        else:
            ts.append(t2)
            break
    else:
        if len(hs) == 1 and bridge_single:
            ts.append(supporting_tangent(hs[-1].arc, c3, stats))
    hs.append(incoming)
    if stats is not None:
        stats.pushes += 1


def build_chain(t: RangeHullTree, q: QueryRect, quad: Quadrant, stats: Optional[QueryStats] = None,
                ext: Optional[Extremes] = None, **merge_opts) -> ChainResult:
    if ext is None:
        ext = extremes(t, q, stats)
    res = ChainResult(quad)
    if ext is None:
        return res
    sx, sy = quad.value
    S = ext.start[quad]
    E = ext.end[quad]
    hs, ts = res.hs, res.ts
    pushes0 = stats.pushes if stats is not None else 0
    merge_step(hs, ts, HullStackEntry(strict_arc(t.leaf_hull(S), quad), (-1, -1)), stats, **merge_opts)
    if S != E:
        # Only points with x' > x'(E) and y' > y'(S) can be interior chain
        # vertices; the endpoints themselves enter as leaf hulls.
        x_lo, x_hi, y_lo, y_hi = q
        if sx > 0:
            x_lo = max(x_lo, E[0] + 1)
        else:
            x_hi = min(x_hi, E[0] - 1)
        slabs = t.decompose_x(x_lo, x_hi)
        if sx > 0:
            slabs.reverse()
        y_low = sy * S[1]  # frame coordinate; the next slab must rise above it
        for v in slabs:
            if sy > 0:
                nodes = t.decompose_y(v, max(y_lo, y_low + 1), y_hi)
            else:
                nodes = t.decompose_y(v, y_lo, min(y_hi, -y_low - 1))
                nodes.reverse()
            if not nodes:
                continue
            arc = None
            for k, w in enumerate(nodes):
                if stats is not None:
                    stats.canonical_nodes_visited += 1
                arc = strict_arc(t.hull(w.id), quad)
                merge_step(hs, ts, HullStackEntry(arc, (v.order, k)), stats, **merge_opts)
            y_low = sy * arc.point(arc.length - 1)[1]
        merge_step(hs, ts, HullStackEntry(strict_arc(t.leaf_hull(E), quad), (-1, -1)), stats, **merge_opts)
    if stats is not None:
        stats.chain_pushes.append(stats.pushes - pushes0)
        stats.chain_sizes.append(len(hs))
    return res


def report_chain(c: ChainResult, stats: Optional[QueryStats] = None) -> list:
    """Chain vertices from the y'-extreme end back to the x'-extreme end."""
    out: list = []
    if c.empty:
        return out
    touches = 0
    for arc, a, b in reversed(list(c.segments())):
        touches += 1
        for k in range(b, a - 1, -1):
            out.append(arc.point(k))
            touches += 1
    if stats is not None:
        stats.report_touches += touches
    return out


def count_chain(c: ChainResult) -> int:
    return sum(b - a + 1 for _, a, b in c.segments())


def perimeter_chain(c: ChainResult) -> float:
    total = 0.0
    prev = None
    for arc, a, b in c.segments():
        if prev is not None:
            total += dist(prev, arc.point(a))
        total += arc.perim(a, b)
        prev = arc.point(b)
    return total


def complement_area_chain(c: ChainResult, corner=None) -> int:
    """Twice the area between the chain and the corner of its extremes box.

    Each hull segment contributes its pocket (arc against chord) from the
    prefix sums; the chord endpoints then form a fan around the corner.
    """
    if c.empty:
        return 0
    sx, sy = c.quadrant.value
    if corner is None:
        corner = (c.start[0], c.end[1])
    signed = 0
    fan = []
    for arc, a, b in c.segments():
        signed += arc.pocket2(a, b)
        fan.append(arc.point(a))
        if b != a:
            fan.append(arc.point(b))
    for k in range(len(fan) - 1):
        signed += tri2(corner, fan[k], fan[k + 1])
    return -sx * sy * signed


def _chains(t, q, stats, **merge_opts):
    ext = extremes(t, q, stats)
    if ext is None:
        return None, []
    return ext, [build_chain(t, q, quad, stats, ext, **merge_opts) for quad in QUADRANTS]


def _stitch(chains: list, stats=None) -> list:
    # CCW order: Q1 as built, Q2 reversed, Q3 as built, Q4 reversed
    seq: list = []
    runs = []
    for c in chains:
        pts = report_chain(c, stats)
        if c.quadrant.sx * c.quadrant.sy > 0:
            pts.reverse()
        runs.append(pts)
    q1 = runs[0]
    for p in [q1[-1]] + runs[1] + runs[2] + runs[3] + q1:
        if not seq or seq[-1] != p:
            seq.append(p)
    while len(seq) > 1 and seq[-1] == seq[0]:
        seq.pop()
    return seq


def query_report(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None, **merge_opts) -> list:
    """Hull vertices of P ∩ q, CCW from the max-y vertex (ties: larger x)."""
    ext, chains = _chains(t, QueryRect(*q), stats, **merge_opts)
    if ext is None:
        return []
    return _stitch(chains, stats)


def _count(ext, chains) -> int:
    ends = set()
    interior = 0
    for c in chains:
        k = count_chain(c)
        interior += k - (1 if c.start == c.end else 2)
        ends.add(c.start)
        ends.add(c.end)
    return interior + len(ends)


def _perimeter(chains) -> float:
    total = 0.0
    for k, c in enumerate(chains):
        total += perimeter_chain(c)
        nxt = chains[(k + 1) % 4]
        # chain ends meet along an axis-parallel extreme edge (possibly empty)
        a = c.end if c.quadrant.sx * c.quadrant.sy > 0 else c.start
        b = nxt.start if nxt.quadrant.sx * nxt.quadrant.sy > 0 else nxt.end
        total += dist(a, b)
    return total


def _area2(ext, chains) -> int:
    return ext.box_area2() - sum(complement_area_chain(c) for c in chains)


def query_count(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None) -> int:
    ext, chains = _chains(t, QueryRect(*q), stats)
    return 0 if ext is None else _count(ext, chains)


def query_perimeter(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None) -> float:
    ext, chains = _chains(t, QueryRect(*q), stats)
    return 0.0 if ext is None else _perimeter(chains)


def query_area(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None) -> AggregateResult:
    ext, chains = _chains(t, QueryRect(*q), stats)
    if ext is None:
        return AggregateResult(0, 0, 0.0, None)
    return AggregateResult(_count(ext, chains), _area2(ext, chains), _perimeter(chains), ext)


def query_all(t: RangeHullTree, q: QueryRect, stats: Optional[QueryStats] = None, **merge_opts) -> dict:
    """Report plus every aggregate from a single set of chains."""
    ext, chains = _chains(t, QueryRect(*q), stats, **merge_opts)
    if ext is None:
        return {"count": 0, "area2": 0, "perimeter": 0.0, "hull": [], "extremes": None, "chains": []}
    return {
        "count": _count(ext, chains),
        "area2": _area2(ext, chains),
        "perimeter": _perimeter(chains),
        "hull": _stitch(chains, stats),
        "extremes": ext,
        "chains": chains,
    }
