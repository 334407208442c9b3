# Build an index over random points and ask what the hull looks like
# inside a few windows.

import random

from rangehull import QueryRect, RangeHullTree, query_all, query_count, query_report

random.seed(1)
pts = [(random.randint(0, 1000), random.randint(0, 1000)) for _ in range(5000)]
tree = RangeHullTree(pts)
print("indexed", tree.n, "points in", round(tree.build_seconds, 3), "s")

window = QueryRect(200, 400, 300, 700)   # x from 200 to 400, y from 300 to 700, inclusive
hull = query_report(tree, window)
print("hull vertices:", len(hull))
print(hull[:5], "...")

# counting never walks the hull, so it costs the same for 5 vertices or 500
print("count only:", query_count(tree, window))

res = query_all(tree, window)
print("area:", res["area2"] / 2, "perimeter:", round(res["perimeter"], 3))

# an empty window is fine too
print(query_all(tree, QueryRect(2000, 3000, 0, 10))["hull"])
