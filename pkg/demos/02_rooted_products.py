"""
Rooted products and the cycle formula
=====================================

Glue a copy of H to every vertex of G and watch the strong dimension grow
linearly in the order of G.
"""

from strongdim import cycle, path, rooted_product, strong_dimension
from strongdim.formulas import dim_cycle_rooted
from strongdim.graph_core import bfs_distances, serialize_graph6

# P_4 with a triangle hanging off every vertex: 12 vertices, 15 edges.
pm = rooted_product(path(4), cycle(3), 0)
print(pm.product, serialize_graph6(pm.product))

# Vertex (a, x) sits at id a*|V(H)| + x; the map goes both ways.
print("copy 2 ids", pm.copy_ids(2), "id 7 ->", pm.id_to_pair(7))

# Distances between copies run through the two roots.
d = bfs_distances(pm.product)
print("d((0,1),(3,2)) =", d[pm.pair_to_id(0, 1), pm.pair_to_id(3, 2)])

# Closed form against the exact solver over a small grid.
print(" r  t  formula  solver")
for r in (2, 3, 4):
    for t in range(3, 8):
        f = dim_cycle_rooted(r, t).value
        s = strong_dimension(rooted_product(path(r), cycle(t), 0).product).value
        print(f"{r:>2} {t:>2} {f:>8} {s:>7}")
