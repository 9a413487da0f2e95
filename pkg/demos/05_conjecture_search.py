"""
Searching for roots off the boundary
====================================

Sample random graphs whose strong resolving graph is a perfect matching and
look at roots outside the boundary.  Any root with nonempty i(v) is kept as
a reproducible finding.
"""

from strongdim import path, rooted_product, strong_dimension
from strongdim.formulas import dim_matching_sr
from strongdim.graph_core import parse_graph6
from strongdim.harness import conjecture_search, recheck_counterexample
from strongdim.metrics import boundary, root_context, strong_resolving_graph

rep = conjecture_search((4, 9), samples=2000, seed=0)
print(f"examined {rep.examined_roots} roots, filtered {rep.filtered}, findings {len(rep.counterexamples)}")
print("all findings reproduce:", all(recheck_counterexample(c) for c in rep.counterexamples))

# The smallest finding: C_6 with one long chord, rooted at a chord end.
h = parse_graph6("ElEG")
ctx = root_context(h, 0)
print("edges", sorted(h.edges))
print("boundary", sorted(boundary(h)), "SR edges", strong_resolving_graph(h).sr_edges)
print("M =", sorted(ctx.M), "i =", sorted(ctx.i), "i' =", sorted(ctx.i_prime))

# The matching-SR formula still agrees with the solver here.
for n in (2, 3, 4):
    f = dim_matching_sr(path(n), h, 0).value
    s = strong_dimension(rooted_product(path(n), h, 0).product).value
    print(f"n={n}: formula {f} solver {s}")
