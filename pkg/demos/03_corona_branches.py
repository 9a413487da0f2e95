"""
Corona products: several formulas, one number
=============================================

A corona product often satisfies the hypotheses of more than one closed
formula.  Every fired branch is evaluated and compared.
"""

from strongdim import Graph, corona_product, path, strong_dimension
from strongdim.formulas import dim_corona, dim_universal_root
from strongdim.graph_core import cycle, empty
from strongdim.products import join_k1

for r, h, name in [(2, path(2), "K2"), (2, path(3), "P3"), (3, empty(2), "2K1"), (2, cycle(5), "C5")]:
    res = dim_corona(r, h)
    exact = strong_dimension(corona_product(path(r), h).product).value
    print(f"P{r} corona {name}: branches {res.branches} exact {exact}")

# The triangle-free rule rt-2 needs a vertex of degree at least two in H.
# With three isolated vertices the product is a tree and the rule is off by one.
h = empty(3)
exact = strong_dimension(corona_product(path(2), h).product).value
print("P2 corona 3K1: rt-2 would give", 2 * 3 - 2, "but the exact value is", exact)
print("branches that fire:", dim_corona(2, h).branches)

# A root adjacent to everything turns a rooted product into a corona.
wheel, apex = join_k1(cycle(5))
res = dim_universal_root(path(3), wheel, apex)
print("P3 rooted at the hub of W5:", res.branches)

# Twins that are universal: K_3 minus a vertex is K_2.
print("K3 universal root:", dim_universal_root(path(4), Graph(3, [(0, 1), (0, 2), (1, 2)]), 0).branches)
