"""
Exact interval and box algebra
==============================

Endpoints carry open/closed flags, so set operations never lose or invent
boundary points.
"""

from fuzzy2crisp.regions import INF, Hyperrectangle, Interval, disjoint_decomposition, region_difference, region_union

###############################################################################
# Removing an open interval leaves its closed boundary behind.

print(region_difference(Hyperrectangle((Interval.open(0, 2),)), Hyperrectangle((Interval.open(1, 2),))))

###############################################################################
# Two overlapping squares become three disjoint boxes with the same points.

a = Hyperrectangle((Interval.closed(0, 2), Interval.closed(0, 2)))
b = Hyperrectangle((Interval.open(1, 3), Interval.open(1, 3)))
union = region_union(a, b)
for box in union.boxes:
    print(" ", box)

###############################################################################
# The endpoint-grid decomposition gives the same point set, cut along every
# endpoint and then merged back where cells touch exactly.

grid = disjoint_decomposition([a, b])
print(len(grid), "boxes")
for x in [(1, 1), (2, 2), (2.5, 0.5), (3, 3), (1.5, 2.5)]:
    assert union.contains(x) == grid.contains(x)
    print(x, union.contains(x))

###############################################################################
# Half-lines are fine too; infinite endpoints are always open.

print(Interval(-INF, 4.96, True, False), Interval.parse("(1.19, +inf)"))
