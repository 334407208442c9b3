# Ties, repeats and straight lines.  Every answer below is checked against
# the brute-force oracle, which is slow but hard to get wrong.

from rangehull import QueryRect, RangeHullTree, oracle_query, query_all

everything = QueryRect(-100, 100, -100, 100)

cases = {
    "repeated point": [(3, 3)] * 10,
    "horizontal line": [(x, 5) for x in range(20)],
    "diagonal": [(i, 2 * i) for i in range(-10, 11)],
    "grid": [(x, y) for x in range(6) for y in range(6)],
    "square + center": [(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)],
}

for name, pts in cases.items():
    t = RangeHullTree(pts)
    got = query_all(t, everything)
    ref = oracle_query(t.points, everything)
    same = got["hull"] == ref["hull"] and got["area2"] == ref["area2"]
    print(f"{name:16} hull={got['hull']}  area2={got['area2']}  "
          f"perimeter={got['perimeter']:.3f}  matches oracle: {same}")

# points on an edge are not vertices: the grid hull is just its 4 corners
