"""Cut-rank and rank-width on small families.

Rank-width scores a recursive bipartition plan of the vertex set by GF(2)
biadjacency ranks; complete graphs and trees sit at width 1, rings at
width 2.  The search is exhaustive over leaf-labelled subcubic trees with
branch-and-bound pruning.
"""

from lcorbits import (
    complete_graph,
    cut_rank,
    cycle_graph,
    enumerate_subcubic_trees,
    explore_unlabelled,
    path_graph,
    rank_width,
    star_graph,
)

p4 = path_graph(4)
print("cut ranks of the 4-path:")
for subset in ({0}, {0, 1}, {0, 2}, {0, 3}):
    print(f"  A={sorted(subset)}: rank {cut_rank(p4, subset)}")

print("\nsearch-space sizes (subcubic trees on k labelled leaves):")
for k in range(3, 8):
    print(f"  k={k}: {sum(1 for _ in enumerate_subcubic_trees(k))}")

print("\nrank-widths:")
for name, g in [
    ("K5", complete_graph(5)),
    ("star6", star_graph(6)),
    ("path7", path_graph(7)),
    ("C5", cycle_graph(5)),
    ("C7", cycle_graph(7)),
]:
    width, decomp = rank_width(g)
    print(f"  {name}: width {width}, tree edges {decomp.edges}")

print("\nrank-width is constant across an LC class (5-ring class):")
orbit = explore_unlabelled(cycle_graph(5))
for g in orbit.vertices:
    print(f"  member with {g.edge_count()} edges: width {rank_width(g)[0]}")
