"""
Testing isomorphism
===================

Relabel a graph, recover the relabeling, and look at a pair of
strongly regular graphs that no degree count separates.
"""

import numpy as np

from partseq import are_isomorphic, families
from partseq.graph import apply_permutation

g = families.latin_square_graph(5)
perm = np.random.default_rng(7).permutation(g.n).tolist()
h = apply_permutation(g, perm)

out = are_isomorphic(g, h)
print("latin square 5 vs relabeled copy:", out.verdict)
print("  mapping reproduces h:", apply_permutation(g, out.mapping) == h)
print("  stats:", out.stats)

# both have 16 vertices of degree 6, but they differ
s, r = families.shrikhande_graph(), families.rook_graph(4)
print("Shrikhande vs 4x4 rook:", are_isomorphic(s, r).verdict)

# a hexagon and two triangles agree on every degree
c6 = families.cycle_graph(6)
two_c3 = families.component_join(families.cycle_graph(3), 2, 0)
print("C6 vs 2 x C3:", are_isomorphic(c6, two_c3).verdict)

# rigid graphs match without backtracking
g = families.random_graph(30, 0.5, 3)
h = apply_permutation(g, list(reversed(range(30))))
print("rigid 30-vertex graph:", are_isomorphic(g, h).stats["match_backtrack_nodes"], "backtrack nodes")
