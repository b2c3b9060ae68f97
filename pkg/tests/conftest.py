import itertools
import random

import pytest

from lcorbits.canon import canonical_form
from lcorbits.graphs import Graph, local_complement


def random_graph(rng: random.Random, n: int) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    from lcorbits.graphs import is_connected

    while True:
        g = random_graph(rng, n)
        if is_connected(g):
            return g


def all_labelled_graphs(n: int):
    """Every labelled simple graph on n vertices, by upper-triangle bits."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [p for i, p in enumerate(pairs) if bits >> i & 1]
        )


@pytest.fixture
def rng():
    return random.Random(20260809)


def naive_explore_unlabelled(seed):
    """Oracle: complement every vertex of every representative (no symmetry
    pruning), recording every working label."""
    c0 = canonical_form(seed).canon
    index = {c0.rows: 0}
    vertices = [c0]
    edges = {}
    queue = [0]
    while queue:
        u = queue.pop(0)
        g = vertices[u]
        for a in range(g.n):
            image = canonical_form(local_complement(g, a)).canon
            if image.rows not in index:
                index[image.rows] = len(vertices)
                vertices.append(image)
                queue.append(index[image.rows])
            v = index[image.rows]
            key = (min(u, v), max(u, v))
            lu, lv = edges.setdefault(key, (set(), set()))
            if u == v:
                lu.add(a)
                lv.add(a)
            elif u == key[0]:
                lu.add(a)
            else:
                lv.add(a)
    return vertices, edges


def abstract_edges(vertices, edges):
    """Index-free view of an orbit: edges keyed by endpoint row tuples."""
    out = {}
    for (u, v), (lu, lv) in edges.items():
        ku, kv = vertices[u].rows, vertices[v].rows
        if ku <= kv:
            out[(ku, kv)] = (frozenset(lu), frozenset(lv))
        else:
            out[(kv, ku)] = (frozenset(lv), frozenset(lu))
    return out
