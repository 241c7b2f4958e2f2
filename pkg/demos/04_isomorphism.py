"""
Same parameters, different graphs
=================================

G_n(2) and NO+(2n+2, 2) share their parameters for every n.  For n = 2 they
are isomorphic; for n = 3 the clique sizes already tell them apart.
"""
from polarsrg.iso import iso_check, is_isomorphism
from polarsrg.srg import build_gn, build_no_plus, distance_two_subgraph_diameter, verify_srg

a, b = build_gn(2, 2), build_no_plus(2)
r = iso_check(a, b)
print("n = 2:", type(r).__name__, "after", r.nodes, "search nodes; verified:",
      is_isomorphism(a, b, r.mapping))
print("first few images:", r.mapping[:10])

g, h = build_gn(3, 2), build_no_plus(3)
print("\nn = 3 parameters:", verify_srg(g).as_tuple(), verify_srg(h).as_tuple())
r = iso_check(g, h)
print("n = 3:", type(r).__name__, "by", r.invariant)
print("  G_3(2) clique sizes  ", r.left)
print("  NO+(8,2) clique sizes", r.right)

# another structural difference: the graph on vertices at distance 2
dg = {distance_two_subgraph_diameter(g, v) for v in range(g.order)}
dh = {distance_two_subgraph_diameter(h, v) for v in range(h.order)}
print("\ndiameter of the distance-2 subgraph: G_3(2)", dg, " NO+(8,2)", dh)
