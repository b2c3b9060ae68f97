import itertools
import random

import pytest

from lcorbits.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    is_connected,
    local_complement,
    path_graph,
    star_graph,
)
from lcorbits.stabilizer import (
    PauliString,
    _pauli_mul,
    apply_lc_unitary,
    graph_to_tableau,
    stabilizer_groups_equal,
    verify_lc,
)
from conftest import all_labelled_graphs, random_connected_graph


def test_pauli_multiplication_table():
    # single-qubit: XY = iZ, YX = -iZ, ZX = iY, XZ = -iY, YZ = iX, ZY = -iX
    X = PauliString(1, 0, 0)
    Z = PauliString(0, 1, 0)
    Y = PauliString(1, 1, 0)
    assert _pauli_mul(X, X, 1) == PauliString(0, 0, 0)
    assert _pauli_mul(X, Y, 1) == PauliString(0, 1, 1)  # iZ
    assert _pauli_mul(Y, X, 1) == PauliString(0, 1, 3)  # -iZ
    assert _pauli_mul(Z, X, 1) == PauliString(1, 1, 1)  # iY
    assert _pauli_mul(X, Z, 1) == PauliString(1, 1, 3)  # -iY
    assert _pauli_mul(Y, Z, 1) == PauliString(1, 0, 1)  # iX
    assert _pauli_mul(Z, Y, 1) == PauliString(1, 0, 3)  # -iX
    assert (_pauli_mul(X, Z, 1).phase - _pauli_mul(Z, X, 1).phase) % 4 == 2


def test_edgeless_graph_tableau():
    t = graph_to_tableau(Graph.empty(3))
    t.validate()
    assert [g.x for g in t.generators] == [1, 2, 4]
    assert all(g.z == 0 and g.phase == 0 for g in t.generators)


def test_k2_tableau():
    t = graph_to_tableau(complete_graph(2))
    t.validate()
    assert (t.generators[0].x, t.generators[0].z) == (0b01, 0b10)  # X Z
    assert (t.generators[1].x, t.generators[1].z) == (0b10, 0b01)  # Z X


def test_triangle_tableau():
    # conjugating each X_v through the three CZ gates gives XZZ / ZXZ / ZZX
    t = graph_to_tableau(complete_graph(3))
    t.validate()
    expected = [(0b001, 0b110), (0b010, 0b101), (0b100, 0b011)]
    assert [(g.x, g.z) for g in t.generators] == expected


def test_tableau_invariants_after_unitary():
    rng = random.Random(31)
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 7))
        a = rng.randrange(g.n)
        t = apply_lc_unitary(graph_to_tableau(g), a, set(g.neighbours(a)))
        t.validate()


def test_unitary_rejects_bad_neighbourhood():
    g = path_graph(3)
    with pytest.raises(ValueError):
        apply_lc_unitary(graph_to_tableau(g), 1, {1})


def test_unitary_on_isolated_vertex_preserves_plus_state():
    t = graph_to_tableau(Graph.empty(3))
    t2 = apply_lc_unitary(t, 0, set())
    assert stabilizer_groups_equal(t, t2)


def test_group_equality_basics():
    t = graph_to_tableau(path_graph(3))
    assert stabilizer_groups_equal(t, t)
    # multiplying one generator into another is a row operation: same group
    other = graph_to_tableau(path_graph(3))
    other.generators[0] = _pauli_mul(
        other.generators[0], other.generators[1], other.n
    )
    other.validate()
    assert stabilizer_groups_equal(t, other)


def test_distinct_states_have_distinct_groups():
    a = graph_to_tableau(star_graph(4))
    b = graph_to_tableau(complete_graph(4))
    assert not stabilizer_groups_equal(a, b)


def test_sign_matters_in_group_equality():
    t = graph_to_tableau(path_graph(2))
    flipped = graph_to_tableau(path_graph(2))
    flipped.generators[0] = PauliString(
        flipped.generators[0].x, flipped.generators[0].z, 2
    )
    flipped.validate()
    assert not stabilizer_groups_equal(t, flipped)


def test_star_centre_unitary_reaches_complete_graph():
    g = star_graph(4)
    t = apply_lc_unitary(graph_to_tableau(g), 0, set(g.neighbours(0)))
    assert stabilizer_groups_equal(t, graph_to_tableau(complete_graph(4)))


def test_verify_lc_on_leaves_is_trivial():
    g = path_graph(4)
    assert local_complement(g, 0) == g
    assert verify_lc(g, 0)


def test_verify_lc_exhaustive_small():
    # every connected graph on up to 4 vertices, every vertex
    for n in (2, 3, 4):
        for g in all_labelled_graphs(n):
            if not is_connected(g):
                continue
            for a in range(n):
                assert verify_lc(g, a)


def test_verify_lc_random():
    rng = random.Random(37)
    for _ in range(300):
        g = random_connected_graph(rng, rng.randint(2, 8))
        a = rng.randrange(g.n)
        assert verify_lc(g, a)


def test_unitary_involution_at_same_vertex():
    rng = random.Random(41)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randint(2, 7))
        a = rng.randrange(g.n)
        t0 = graph_to_tableau(g)
        t1 = apply_lc_unitary(t0, a, set(g.neighbours(a)))
        h = local_complement(g, a)
        t2 = apply_lc_unitary(t1, a, set(h.neighbours(a)))
        assert stabilizer_groups_equal(t0, t2)
