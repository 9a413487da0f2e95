"""
Where the root sits matters
===========================

The graphs H_{t,p,r} have the same strong dimension whichever root is used
in isolation, yet rooted products built from two different roots differ.
General bounds bracket both.
"""

from strongdim import path, rooted_product, strong_dimension, v_in_some_basis
from strongdim.formulas import bounds_general, family_F_product_value
from strongdim.harness import check_divide_lemma
from strongdim.products import FamilyFSpec, family_F

spec = FamilyFSpec(9, 3, 4)
h, marks = family_F(spec)
print(h, "dim_s =", strong_dimension(h).value, "expected", spec.dim_s)
print("y in some basis?", v_in_some_basis(h, marks["y"]), "| x_t in some basis?", v_in_some_basis(h, marks["x_t"]))

g = path(2)
for choice in ("y", "x_t"):
    v = marks[choice]
    prod = rooted_product(g, h, v).product
    rep = strong_dimension(prod)
    b = bounds_general(g, h, v)
    f = family_F_product_value(g.n, spec, choice)
    print(f"root {choice}: exact {rep.value}, closed form {f.value}, interval [{b.lower}, {b.upper}] ({b.case})")
    # How the basis splits across the two copies of H.
    for row in check_divide_lemma(g, h, v, rep):
        print("   copy", row["copy"], "holds", row["size"], "basis vertices; ok =", row["ok"])
