"""Static range tree whose secondary nodes carry canonical convex hulls.

The primary tree splits the points sorted by (x, y) at midpoints; the
secondary tree of each primary node splits that node's points sorted by
(y, x).  Every secondary node, leaves included, stores the hull of its
subtree.  All hulls live in a handful of flat buffers so that a tree over
10^5 points fits comfortably in memory; :meth:`RangeHullTree.hull` hands out
lightweight views.
"""
from __future__ import annotations

import math
import time
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import _build
from .geom import CanonicalHull, EmptyInput, check_coords


class QueryRect(NamedTuple):
    """Inclusive rectangle [x_lo, x_hi] x [y_lo, y_hi]."""

    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int


class PrimaryNode(NamedTuple):
    lo: int
    hi: int
    depth: int
    order: int = 0  # position among the decomposition's nodes, left to right


class SecondaryNode(NamedTuple):
    id: int
    a: int  # position range inside the level order
    b: int


@dataclass
class StorageStats:
    nodes: int
    stored_vertices: int
    bytes_estimate: int


class RangeHullTree:
    def __init__(self, points: Iterable):
        raw = [tuple(p) for p in points]
        pts = sorted(set(raw))
        if not pts:
            raise EmptyInput("no points to index")
        check_coords(pts)
        self.n = n = len(pts)
        self.dedup_count = len(raw) - n
        self.depth = depth = max(1, math.ceil(math.log2(n)) + 1) if n > 1 else 1
        X = np.fromiter((p[0] for p in pts), np.int64, n)
        Y = np.fromiter((p[1] for p in pts), np.int64, n)
        t0 = time.perf_counter()
        ys = _build.level_orders(X, Y, depth)
        (hv, hoff, hlen, ixmax, ixmin, iymin, poff, pp, pc,
         leaf_id, work) = _build.build_hulls(X, Y, ys, depth)
        self.build_seconds = time.perf_counter() - t0
        self.build_work = int(work)
        self.points = pts
        self._X, self._Y = X, Y
        self.xs_sorted = memoryview(X)
        self.ys_by_rank = memoryview(Y)
        self._level_y = Y[ys]  # y of the point at each level position
        self._ly = [memoryview(self._level_y[d]) for d in range(depth)]
        self._ys = ys
        self._hx = X[hv]
        self._hy = Y[hv]
        self._arrays = (hoff, hlen, ixmax, ixmin, iymin, poff, pp, pc, leaf_id)
        self.hx = memoryview(self._hx)
        self.hy = memoryview(self._hy)
        self.hoff = memoryview(hoff)
        self.hlen = memoryview(hlen)
        self.ixmax = memoryview(ixmax)
        self.ixmin = memoryview(ixmin)
        self.iymin = memoryview(iymin)
        self.poff = memoryview(poff)
        self.pp = memoryview(pp)
        self.pc = memoryview(pc)
        self.leaf_id = memoryview(leaf_id)

    # -- hulls ------------------------------------------------------------
    def hull(self, node_id: int) -> CanonicalHull:
        return CanonicalHull(self.hx, self.hy, self.hoff[node_id], self.hlen[node_id],
                             self.ixmax[node_id], self.ixmin[node_id], self.iymin[node_id],
                             self.pp, self.pc, self.poff[node_id], node_id)

    def rank_of(self, p) -> int:
        x, y = p
        lo = bisect_left(self.xs_sorted, x)
        hi = bisect_right(self.xs_sorted, x, lo)
        r = bisect_left(self.ys_by_rank, y, lo, hi)
        if r == hi or self.ys_by_rank[r] != y:
            raise KeyError(p)
        return r

    def leaf_hull(self, p) -> CanonicalHull:
        return self.hull(self.leaf_id[self.rank_of(p)])

    @property
    def root(self) -> PrimaryNode:
        return PrimaryNode(0, self.n, 0)

    # -- decompositions ---------------------------------------------------
    def decompose_x(self, x_lo: int, x_hi: int) -> list:
        """Maximal primary subtrees inside [x_lo, x_hi], left to right."""
        if x_lo > x_hi:
            return []
        lo = bisect_left(self.xs_sorted, x_lo)
        hi = bisect_right(self.xs_sorted, x_hi)
        out = canonical_ranges(0, self.n, lo, hi)
        return [PrimaryNode(a, b, d, k) for k, (a, b, d) in enumerate(out)]

    def decompose_y(self, v: PrimaryNode, y_lo: int, y_hi: int) -> list:
        """Maximal secondary subtrees of ``v`` inside [y_lo, y_hi], bottom to top."""
        if y_lo > y_hi:
            return []
        ly = self._ly[v.depth]
        a = bisect_left(ly, y_lo, v.lo, v.hi)
        b = bisect_right(ly, y_hi, a, v.hi)
        if a >= b:
            return []
        return secondary_ranges(v.lo, v.hi, self.depth_base(v), a, b)

    def depth_base(self, v: PrimaryNode) -> int:
        return v.depth * 2 * self.n + 2 * v.lo

    def node_points(self, v: PrimaryNode, w: SecondaryNode) -> list:
        ranks = self._ys[v.depth, w.a:w.b]
        return [self.points[r] for r in ranks]

    def storage_stats(self) -> StorageStats:
        hoff, hlen = self._arrays[0], self._arrays[1]
        used = hoff >= 0
        nodes = int(used.sum())
        verts = int(hlen[used].sum())
        nbytes = (self._hx.nbytes + self._hy.nbytes + self._level_y.nbytes + self._ys.nbytes
                  + sum(a.nbytes for a in self._arrays))
        return StorageStats(nodes, verts, nbytes)


def build_tree(points: Iterable) -> RangeHullTree:
    return RangeHullTree(points)


def canonical_ranges(lo: int, hi: int, qlo: int, qhi: int) -> list:
    """Maximal midpoint-split subranges of [lo, hi) covering [qlo, qhi), in order.

    Returns (lo, hi, depth) triples.
    """
    out: list = []
    if qlo >= qhi:
        return out
    stack = [(lo, hi, 0)]
    while stack:
        a, b, d = stack.pop()
        if qlo <= a and b <= qhi:
            out.append((a, b, d))
            continue
        mid = (a + b) >> 1
        # push right first so the left part pops first
        if mid < qhi and qlo < b:
            stack.append((mid, b, d + 1))
        if qlo < mid and a < qhi:
            stack.append((a, mid, d + 1))
    return out


def secondary_ranges(lo: int, hi: int, base: int, qlo: int, qhi: int) -> list:
    out: list = []
    stack = [(lo, hi, base)]
    while stack:
        a, b, nid = stack.pop()
        if qlo <= a and b <= qhi:
            out.append(SecondaryNode(nid, a, b))
            continue
        mid = (a + b) >> 1
        if mid < qhi and qlo < b:
            stack.append((mid, b, nid + 2 * (mid - a)))
        if qlo < mid and a < qhi:
            stack.append((a, mid, nid + 1))
    return out
