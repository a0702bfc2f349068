"""
Witness constructions
=====================

Given a center graph C, a periphery graph P and a covering of P, the
layered scaffold joins them with one spine chain per block plus an apex
chain.  Deleting apex vertices produces the tight witnesses; the refined
scaffold splits one block across two feet.  Builders never refuse bad
coverings: a separate verification step recomputes everything from
scratch, because "does this build work?" is exactly equivalent to the
covering conditions and we exercise both directions.
"""

import ucgkit as U
from ucgkit import Covering, Graph, RefinedCovering

k2 = Graph.complete(2)
p3 = Graph.path(3)
two_k1 = Graph.empty(2, labels=["u", "v"])
cover = Covering(two_k1, (frozenset({0}), frozenset({1})))

# Depth-1 scaffold over two isolated periphery vertices: 7 vertices,
# uniform central of radius 2 with the intended center and periphery.
s = U.build_scaffold(k2, two_k1, cover, rho=1)
rep = U.verify_construction(s, k2, two_k1)
print("depth-1 scaffold:", s.graph, "roles:", s.roles)
print("  verified:", rep.ok, " radius:", rep.radius,
      " intermediate count:", rep.intermediate_count)

# Dropping the apex vertex gives the tight witness with one fewer
# intermediate vertex; it verifies because the covering meets A and B.
s2 = U.build_scaffold(k2, two_k1, cover, rho=1, drop=(1,))
print("minus apex:", U.verify_construction(s2, k2, two_k1).intermediate_count,
      "intermediate vertices, ok:",
      U.verify_construction(s2, k2, two_k1).ok)

# With a non-complete center the chains must have depth 2; dropping only
# the apex tip leaves 2k+1 intermediates (needs condition A').
s3 = U.build_scaffold(p3, two_k1, cover, rho=2, drop=(2,))
print("depth-2 minus apex tip over a path center:",
      U.verify_construction(s3, p3, two_k1).intermediate_count,
      "intermediates, ok:", U.verify_construction(s3, p3, two_k1).ok)

# Depth 1 under a non-complete center cannot work: the center vertices
# see each other at the radius and pollute the eccentric sets.
bad = U.build_scaffold(p3, two_k1, cover, rho=1)
print("depth-1 under a path center verifies:",
      U.verify_construction(bad, p3, two_k1).ok)

# The refined scaffold hangs the first block on two feet.  On the
# heptagonal prism the bundled refined covering meets A, A'', B'', so
# the build verifies with 2k+1 = 5 intermediates.
prism = U.gen_prism(7).graph
rc = U.refined_cover_of(U.prism7_refined_cover())
s4 = U.build_refined_scaffold(p3, prism, rc)
rep4 = U.verify_construction(s4, p3, prism)
print("\nrefined scaffold over the heptagonal prism:",
      rep4.ok, "with", rep4.intermediate_count, "intermediates")

# A bad refinement fails verification rather than being refused upfront.
base = rc.base
lazy = RefinedCovering(base, 0, base.blocks[0], frozenset())
s5 = U.build_refined_scaffold(p3, prism, lazy)
print("all-in-Q0 refinement verifies:",
      U.verify_construction(s5, p3, prism).ok)

# The cone is the one-vertex-center witness.
cone = U.build_cone(U.named_graph("2k2"))
print("\ncone over two disjoint edges verifies:",
      U.verify_construction(cone, Graph(1), U.named_graph("2k2")).ok)

# DOT export colors vertices by role for quick figures.
print("\nDOT preview of the depth-1 witness:")
print(U.to_dot(s2.graph, s2.roles))
