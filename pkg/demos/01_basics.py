"""
Strong resolving sets on small graphs
=====================================

Compute boundaries, strong resolving graphs and the strong dimension of a
few familiar graphs, then confirm each value by brute force.
"""

from strongdim import boundary, cycle, path, simplicial, strong_dimension, strong_resolving_graph
from strongdim.graph_core import hypercube, random_tree
from strongdim.harness import oracle_strong_dimension
from strongdim.metrics import leaves

# A path has only its two ends on the boundary, and they form one pair.
p6 = path(6)
print("P6 boundary", sorted(boundary(p6)), "simplicial", sorted(simplicial(p6)))
print("P6 SR edges", strong_resolving_graph(p6).sr_edges)

# Odd and even cycles behave differently: C_7 pairs every vertex with two
# others, C_8 pairs it with its antipode only.
for n in (7, 8):
    sr = strong_resolving_graph(cycle(n))
    print(f"C{n}: {len(sr.sr_edges)} SR edges, dim_s = {strong_dimension(cycle(n)).value}")

# dim_s is the vertex cover number of the SR graph.  The report carries a basis
# and the number of search nodes the cover solver used.
rep = strong_dimension(hypercube(4))
print("Q4:", rep.value, "basis", sorted(rep.basis), "nodes", rep.branch_nodes)

# The oracle never builds an SR graph; it tries vertex subsets by size.
for seed in range(5):
    t = random_tree(9, seed=seed)
    a, b = strong_dimension(t).value, oracle_strong_dimension(t).value
    print(f"tree {seed}: leaves={len(leaves(t))} solver={a} oracle={b}")
