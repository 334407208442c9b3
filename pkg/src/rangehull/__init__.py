"""Orthogonal range queries for convex hulls.

Build a :class:`RangeHullTree` once, then ask for the hull of the points in
any axis-parallel rectangle, or just its vertex count, area or perimeter.
"""
from .chains import (AggregateResult, ChainResult, QueryStats, query_all, query_area, query_count,
                     query_perimeter, query_report)
from .geom import (COORD_LIMIT, CanonicalHull, CoordinateOutOfRange, EmptyInput, Quadrant,
                   build_hull, orient, tri2)
from .oracle import oracle_query
from .rangetree import QueryRect, RangeHullTree, build_tree
from .tangent import supporting_tangent, tangent_probe_budget

__all__ = [
    "AggregateResult", "COORD_LIMIT", "CanonicalHull", "ChainResult", "CoordinateOutOfRange",
    "EmptyInput", "Quadrant", "QueryRect", "QueryStats", "RangeHullTree", "build_hull",
    "build_tree", "oracle_query", "orient", "query_all", "query_area", "query_count",
    "query_perimeter", "query_report", "supporting_tangent", "tangent_probe_budget", "tri2",
]
