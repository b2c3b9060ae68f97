"""Walk through one entanglement class end to end.

The 4-qubit path state is the smallest class with interesting structure:
four non-isomorphic states, three equivalent labelled orbits, and a
path-shaped orbit graph with self-loops at the leafy states.
"""

from lcorbits import (
    all_pairs_distances,
    class_record,
    enumerate_labelled_orbits,
    explore_labelled,
    explore_unlabelled,
    path_graph,
    quotient_to_unlabelled,
)
from lcorbits.formats import adjacency_matrix, export_matrices
from lcorbits.orbit import canonical_vertex_order, reorder

seed = path_graph(4)
print("seed edges:", seed.edges())

lo = explore_labelled(seed)
print(f"\nlabelled orbit: {lo.vertex_count} states, {lo.edge_count} moves")

co = explore_unlabelled(seed)
print(f"unlabelled orbit: {co.vertex_count} classes, {co.edge_count} moves")
for i, g in enumerate(co.vertices):
    print(f"  state {i}: {g.edge_count()} edges {g.edges()}")

q = quotient_to_unlabelled(lo)
print("\nquotient of the labelled orbit has", q.vertex_count, "classes")

table = all_pairs_distances(co)
print(f"distances: diameter {table.diameter}, mean {table.mean:.2f}")

ordered = reorder(co, canonical_vertex_order(co))
print("\nadjacency matrix (smallest 1-based move, 0 = none):")
print(adjacency_matrix(ordered))

record = class_record(co, schmidt=(2, 2))
print("\nclass record:")
for key, value in record.to_dict().items():
    print(f"  {key}: {value}")

orbits = enumerate_labelled_orbits(co)
print(f"\nthe class splits into {len(orbits)} labelled orbits of sizes",
      [o.vertex_count for o in orbits])

adjacency_csv, distance_csv, blocks = export_matrices(co)
print("\nadjacency CSV:")
print(adjacency_csv.decode(), end="")
print("block sidecar:", blocks.decode(), end="")
