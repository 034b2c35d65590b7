"""
Automorphism groups of small families
=====================================

Generators, orders and orbits for a few standard graphs, checked
against exhaustive search where that is cheap.
"""

from partseq import automorphism_group, families
from partseq.graph import cycle_notation
from partseq.oracle import brute_force_aut

# a directed triangle only has rotations
g = families.directed_cycle(3)
res = automorphism_group(g)
print("directed C3:", res.order, [cycle_notation(p) for p in res.generators])

# Petersen: 120 symmetries, one orbit
res = automorphism_group(families.petersen_graph())
print("Petersen:", res.order, "orbits", res.orbits)
print("  oracle agrees:", brute_force_aut(families.petersen_graph()).order == res.order)

# Paley tournaments are vertex transitive with order q(q-1)/2
for q in (7, 11, 19, 23):
    res = automorphism_group(families.paley_tournament(q))
    print(f"paley tournament {q}: order {res.order}, {len(res.orbits)} orbit(s)")

# the 3x3 latin square graph is strongly regular
g = families.latin_square_graph(3)
res = automorphism_group(g)
print("latin square 3:", res.order, "with", len(res.generators), "generators")

# a path: the reflection comes from vertices dropped together, not from search
res = automorphism_group(families.path_graph(3))
print("P3:", res.order, res.provenance)
