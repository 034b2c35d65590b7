"""
Swapping components
===================

Two disjoint pentagons.  Once a vertex of one pentagon is fixed, the
refinement reaches a partition whose cells sit inside the cells of an
earlier level; replaying the alternative pivot up to that point is
enough to infer the whole swap.
"""

from partseq.autgroup import infer_generator, search_automorphisms
from partseq.families import component_join, cycle_graph
from partseq.graph import cycle_notation
from partseq.sequence import generate_sequence, replay_alternative

g = component_join(cycle_graph(5), 2, 0)
seq = generate_sequence(g)
print("levels:", seq.t, "backtracking at", seq.backtracking_levels)
print("links:", seq.subpartition_links)

for k, lev in enumerate(seq.levels[:3]):
    print(k, lev.refinement_kind, lev.partition.cells)

k = seq.backtracking_levels[0]
l = seq.subpartition_links[k]
res = replay_alternative(g, seq, k, 7, stop=l)
print(f"replay level {k} with vertex 7 up to level {l}: compatible={res.compatible}")
perm = infer_generator(g, seq, k, res.discards, l)
print("inferred:", cycle_notation(perm))

res, _ = search_automorphisms(g, seq)
print("order:", res.order)
for perm, prov in zip(res.generators, res.provenance):
    print(" ", prov, cycle_notation(perm))

# joined by all edges instead: same group
h = component_join(cycle_graph(5), 2, 3)
print("joined:", search_automorphisms(h, generate_sequence(h))[0].order)
