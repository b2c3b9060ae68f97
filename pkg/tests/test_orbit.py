import random

import pytest

from lcorbits.canon import canonical_form, canonical_rows
from lcorbits.errors import DisconnectedSeedError
from lcorbits.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    local_complement,
    path_graph,
    star_graph,
)
from lcorbits.orbit import (
    LABELLED,
    UNLABELLED,
    all_pairs_distances,
    canonical_vertex_order,
    explore_labelled,
    explore_unlabelled,
    quotient_to_unlabelled,
    reorder,
)
from conftest import abstract_edges, naive_explore_unlabelled, random_connected_graph


def naive_fixed_point_closure(seed):
    """Oracle: close the labelled state set under all complementations,
    with no frontier bookkeeping at all."""
    states = {seed}
    while True:
        new = {
            local_complement(g, a) for g in states for a in range(seed.n)
        } - states
        if not new:
            return states
        states |= new


def test_star_labelled_orbit_is_a_star():
    # GHZ-type classes: n+1 labelled states in star formation
    for n in (4, 5, 6, 7):
        o = explore_labelled(star_graph(n))
        assert o.vertex_count == n + 1
        rows = o.simple_rows(loops=False)
        target = [0] * (n + 1)
        for i in range(1, n + 1):
            target[0] |= 1 << i
            target[i] = 1
        assert canonical_rows(rows)[0] == canonical_rows(tuple(target))[0]


def test_k2_orbit_single_vertex_with_loops():
    o = explore_labelled(complete_graph(2))
    assert o.vertex_count == 1
    assert o.edges == {(0, 0): (frozenset({0, 1}), frozenset({0, 1}))}


def test_labelled_orbit_matches_fixed_point_closure():
    for seed in (path_graph(4), cycle_graph(5), star_graph(5)):
        o = explore_labelled(seed)
        assert {g for g in o.vertices} == naive_fixed_point_closure(seed)


def test_labelled_p4_quotient_size():
    o = explore_labelled(path_graph(4))
    assert len({canonical_form(g).canon for g in o.vertices}) == 4


def test_labelled_edges_are_exact_moves():
    o = explore_labelled(path_graph(4))
    for (u, v), (lu, lv) in o.edges.items():
        for a in lu:
            assert local_complement(o.vertices[u], a) == o.vertices[v]
        for a in lv:
            assert local_complement(o.vertices[v], a) == o.vertices[u]


def test_labelled_self_loops_iff_degree_one_vertex():
    rng = random.Random(211)
    for _ in range(20):
        seed = random_connected_graph(rng, rng.randint(2, 6))
        o = explore_labelled(seed)
        loops = o.loop_vertices()
        for i, g in enumerate(o.vertices):
            has_low_degree = any(g.degree(v) <= 1 for v in range(g.n))
            assert (i in loops) == has_low_degree


def test_unlabelled_counts_for_known_classes():
    # (seed, orbit size, merged edge count)
    cases = [
        (path_graph(4), 4, 5),
        (star_graph(4), 2, 2),
        (cycle_graph(5), 3, 3),
    ]
    for seed, size, edge_count in cases:
        o = explore_unlabelled(seed)
        assert o.vertex_count == size
        assert o.edge_count == edge_count


def test_unlabelled_edges_are_moves_up_to_isomorphism():
    from lcorbits.canon import are_isomorphic

    o = explore_unlabelled(cycle_graph(5))
    for (u, v), (lu, lv) in o.edges.items():
        for a in lu:
            assert are_isomorphic(
                local_complement(o.vertices[u], a), o.vertices[v]
            )
        for a in lv:
            assert are_isomorphic(
                local_complement(o.vertices[v], a), o.vertices[u]
            )


def test_pruned_equals_unpruned_exploration():
    rng = random.Random(223)
    seeds = [path_graph(4), star_graph(4), cycle_graph(5), cycle_graph(6)]
    seeds += [random_connected_graph(rng, rng.randint(3, 6)) for _ in range(10)]
    for seed in seeds:
        o = explore_unlabelled(seed)
        nv, ne = naive_explore_unlabelled(seed)
        assert abstract_edges(o.vertices, o.edges) == abstract_edges(nv, ne)


def test_quotient_matches_direct_unlabelled():
    rng = random.Random(227)
    seeds = [path_graph(4), star_graph(4), star_graph(5), cycle_graph(5)]
    seeds += [random_connected_graph(rng, rng.randint(3, 5)) for _ in range(8)]
    for seed in seeds:
        lo = explore_labelled(seed)
        q = quotient_to_unlabelled(lo)
        o = explore_unlabelled(seed)
        assert q.kind == UNLABELLED
        assert abstract_edges(q.vertices, q.edges) == abstract_edges(
            o.vertices, o.edges
        )


def test_quotient_star_and_k2():
    assert quotient_to_unlabelled(explore_labelled(star_graph(4))).vertex_count == 2
    assert quotient_to_unlabelled(explore_labelled(complete_graph(2))).vertex_count == 1
    assert quotient_to_unlabelled(explore_labelled(path_graph(4))).vertex_count == 4
    with pytest.raises(ValueError):
        quotient_to_unlabelled(explore_unlabelled(path_graph(4)))


def test_disconnected_seed_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedSeedError):
        explore_labelled(g)
    with pytest.raises(DisconnectedSeedError):
        explore_unlabelled(g)


def test_distances_on_path_class_orbit():
    o = explore_unlabelled(path_graph(4))
    table = all_pairs_distances(o)
    assert table.diameter == 3
    assert round(table.mean, 2) == 1.67
    assert (table.matrix == table.matrix.T).all()
    assert (table.matrix.diagonal() == 0).all()


def test_distances_single_vertex():
    o = explore_labelled(complete_graph(2))
    table = all_pairs_distances(o)
    assert table.diameter == 0 and table.mean == 0.0


def test_distance_triangle_inequality():
    o = explore_unlabelled(cycle_graph(6))
    d = all_pairs_distances(o).matrix
    k = len(d)
    for i in range(k):
        for j in range(k):
            for m in range(k):
                assert d[i][j] <= d[i][m] + d[m][j]


def test_canonical_vertex_order_groups_and_sorts():
    o = explore_labelled(path_graph(4))
    order = canonical_vertex_order(o)
    keys = [canonical_form(o.vertices[i]).canon.rows for i in order]
    # isomorphic states contiguous
    seen = set()
    prev = None
    for k in keys:
        if k != prev:
            assert k not in seen
            seen.add(k)
            prev = k
    # edge counts non-decreasing within the whole order
    counts = [o.vertices[i].edge_count() for i in order]
    assert counts == sorted(counts)


def test_reorder_preserves_structure():
    o = explore_unlabelled(cycle_graph(5))
    order = canonical_vertex_order(o)
    r = reorder(o, order)
    assert abstract_edges(r.vertices, r.edges) == abstract_edges(
        o.vertices, o.edges
    )
    assert canonical_vertex_order(r) == list(range(r.vertex_count))


def test_worker_count_determinism():
    seed = cycle_graph(6)
    base_l = explore_labelled(seed, workers=1)
    base_u = explore_unlabelled(seed, workers=1)
    for w in (2, 8):
        ol = explore_labelled(seed, workers=w)
        ou = explore_unlabelled(seed, workers=w)
        assert ol.vertices == base_l.vertices and ol.edges == base_l.edges
        assert ou.vertices == base_u.vertices and ou.edges == base_u.edges


def test_orbit_stats():
    o = explore_unlabelled(path_graph(4))
    s = o.stats()
    assert s["vertex_count"] == 4
    assert s["edge_count"] == 5
    assert s["n_tilde"] == pytest.approx(1.25)
