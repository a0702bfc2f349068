"""
Appendage numbers
=================

The central-peripheral appendage number of a pair (C, P) is the fewest
extra vertices that glue C and P into a uniform central graph whose
center induces C and whose centered periphery induces P.  The engine
settles it through exact covering decisions, always returning a
verified witness graph; a brute-force search over all edge subsets
cross-checks the small cases.
"""

import ucgkit as U
from ucgkit import Graph

k1 = Graph(1)
k2 = Graph.complete(2)
p3 = Graph.path(3)

pairs = [
    (k1, "c4"), (k2, "2k1"), (k2, "2k2"), (k2, "c7"),
    (k2, "c4"), (p3, "2k1"), (p3, "p6"), (p3, "c6"), (k2, "k1_3"),
]
print("appendage numbers with their deciding facts:")
for c, ptok in pairs:
    p = U.named_graph(ptok)
    res = U.appendage_number(c, p)
    cname = "K1" if c.n == 1 else ("K2" if c.is_complete else "P3")
    print(f"  A({cname}, {ptok:5s}) = {res.value!s:4}  [{res.case}]")

# Every finite value ships with a verified witness: re-check one.
res = U.appendage_number(k2, U.named_graph("2k2"))
rep = U.verify_construction(res.witness, k2, U.named_graph("2k2"))
print("\nwitness for (K2, 2k2): verified", rep.ok,
      "with", rep.intermediate_count, "intermediate vertices")

# The independent oracle enumerates raw edge subsets and agrees.
print("brute force over edge subsets:",
      U.brute_force_appendage(k2, U.named_graph("2k2"), 2))

# The two prisms split the diameter-4 / radius-4 row: 5 vs 6.
for m in (7, 6):
    prism = U.gen_prism(m).graph
    print(f"A(P3, prism{m}) =", U.appendage_number(p3, prism).value)

# Doubled cliques show the value is unbounded at diameter 2, and the
# padded variants show it is not tied to the vertex count either.
for alpha in (2, 3):
    g = U.gen_P_alpha(alpha).graph
    print(f"A(K2, doubled clique alpha={alpha}) =",
          U.appendage_number(k2, g).value, f"(order {g.n})")
for alpha, beta in ((2, 1), (3, 2)):
    g = U.gen_P_alpha_beta(alpha, beta).graph
    print(f"A(K2, padded alpha={alpha}, beta={beta}) =",
          U.appendage_number(k2, g).value, f"(order {g.n})")

# Fixing only one side: a lone center needs 2/4/6 appended vertices
# depending on its shape; a lone periphery always needs exactly one.
for c in (k1, Graph.complete(5), p3):
    print("center-only value:", U.appendage_center_only(c).value)
print("periphery-only value for c6:",
      U.appendage_periphery_only(Graph.cycle(6)).value)
