"""Breadth-first mapping of local-complementation orbits.

An orbit is itself a graph: vertices are graph states, edges are single
local complementations, labelled by the complemented vertex.  Labelled
orbits keep every distinct labelled state; unlabelled orbits merge
isomorphic states and store one canonical representative per class, with
edge labels expressed relative to that representative.  Parallel edges are
merged into per-direction label sets; self-loops are kept.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .canon import canonical_form, vertex_symmetry_classes
from .errors import DisconnectedSeedError
from .graphs import Graph, is_connected, local_complement

LABELLED = "labelled"
UNLABELLED = "unlabelled"

EdgeLabels = tuple[frozenset[int], frozenset[int]]


def worker_count(workers: int | None = None) -> int:
    """Explicit argument, else LC_ORBIT_THREADS, else 1."""
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("LC_ORBIT_THREADS", "")
    if env.strip():
        return max(1, int(env))
    return 1


@dataclass
class Orbit:
    """A fully explored orbit.

    edges maps (u, v) with u <= v to (labels_from_u, labels_from_v); label
    a in labels_from_u means complementing vertex a of state u lands on
    state v (exactly for labelled orbits, up to isomorphism otherwise).
    Self-loops use u == v with both label sets equal.
    """

    kind: str
    seed: Graph
    vertices: list[Graph]
    edges: dict[tuple[int, int], EdgeLabels]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Merged edge count, self-loops included."""
        return len(self.edges)

    @property
    def n_tilde(self) -> float:
        return self.edge_count / self.vertex_count

    def stats(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "n_tilde": self.n_tilde,
        }

    def loop_vertices(self) -> frozenset[int]:
        return frozenset(u for (u, v) in self.edges if u == v)

    def simple_rows(self, loops: bool = False) -> tuple[int, ...]:
        """The orbit graph as adjacency bitmask rows (labels ignored).

        With loops=True, self-loops appear as diagonal bits.
        """
        rows = [0] * self.vertex_count
        for u, v in self.edges:
            if u == v:
                if loops:
                    rows[u] |= 1 << u
            else:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return tuple(rows)

    def degree(self, u: int, loops: bool = True) -> int:
        """Orbit-graph degree; a self-loop contributes 2."""
        d = 0
        for (a, b) in self.edges:
            if a == b == u:
                d += 2 if loops else 0
            elif u in (a, b):
                d += 1
        return d


def _add_label(
    edges: dict[tuple[int, int], tuple[set[int], set[int]]],
    u: int,
    v: int,
    labels: Iterable[int],
) -> None:
    a, b = (u, v) if u <= v else (v, u)
    lu, lv = edges.setdefault((a, b), (set(), set()))
    if u == v:
        lu.update(labels)
        lv.update(labels)
    elif u == a:
        lu.update(labels)
    else:
        lv.update(labels)


def _freeze(
    edges: dict[tuple[int, int], tuple[set[int], set[int]]],
) -> dict[tuple[int, int], EdgeLabels]:
    return {
        k: (frozenset(lu), frozenset(lv)) for k, (lu, lv) in sorted(edges.items())
    }


def _bfs_explore(
    seed_vertex: Graph,
    expand: Callable[[Graph], list[tuple[tuple[int, ...], Graph]]],
    workers: int | None,
) -> tuple[list[Graph], dict[tuple[int, int], EdgeLabels]]:
    """Shared frontier loop.

    expand(state) returns (labels, image) moves.  Per generation, every
    frontier vertex is expanded (possibly in parallel), results are merged
    in frontier order and new states are indexed in sorted order, so the
    resulting orbit is identical for any worker count.
    """
    nworkers = worker_count(workers)
    index: dict[tuple[int, ...], int] = {seed_vertex.rows: 0}
    vertices: list[Graph] = [seed_vertex]
    edges: dict[tuple[int, int], tuple[set[int], set[int]]] = {}
    frontier = [0]
    pool = ThreadPoolExecutor(max_workers=nworkers) if nworkers > 1 else None
    try:
        while frontier:
            states = [vertices[u] for u in frontier]
            if pool is None:
                expansions = [expand(s) for s in states]
            else:
                expansions = list(pool.map(expand, states))
            moves: list[tuple[int, tuple[int, ...], Graph]] = []
            batch: dict[tuple[int, ...], Graph] = {}
            for u, expansion in zip(frontier, expansions):
                for labels, image in expansion:
                    moves.append((u, labels, image))
                    key = image.rows
                    if key not in index and key not in batch:
                        batch[key] = image
            new_frontier = []
            for key in sorted(batch):
                index[key] = len(vertices)
                vertices.append(batch[key])
                new_frontier.append(index[key])
            for u, labels, image in moves:
                _add_label(edges, u, index[image.rows], labels)
            frontier = new_frontier
    finally:
        if pool is not None:
            pool.shutdown()
    return vertices, _freeze(edges)


def explore_labelled(seed: Graph, workers: int | None = None) -> Orbit:
    """Map every labelled state reachable from the seed.

    All n complementations are applied to every state; identity moves
    (degree <= 1 vertices) become self-loops.
    """
    if not is_connected(seed):
        raise DisconnectedSeedError("labelled orbit exploration needs a connected seed")
    n = seed.n

    def expand(g: Graph) -> list[tuple[tuple[int, ...], Graph]]:
        return [((a,), local_complement(g, a)) for a in range(n)]

    vertices, edges = _bfs_explore(seed, expand, workers)
    return Orbit(kind=LABELLED, seed=seed, vertices=vertices, edges=edges)


def explore_unlabelled(seed: Graph, workers: int | None = None) -> Orbit:
    """Map the isomorphism classes reachable from the seed.

    Only one representative per vertex symmetry class is complemented;
    symmetric vertices give isomorphic images, so the whole class is
    recorded as the edge label set.
    """
    if not is_connected(seed):
        raise DisconnectedSeedError(
            "unlabelled orbit exploration needs a connected seed"
        )

    def expand(g: Graph) -> list[tuple[tuple[int, ...], Graph]]:
        out = []
        for cls in vertex_symmetry_classes(g):
            image = local_complement(g, cls[0])
            out.append((cls, canonical_form(image).canon))
        return out

    vertices, edges = _bfs_explore(canonical_form(seed).canon, expand, workers)
    return Orbit(kind=UNLABELLED, seed=seed, vertices=vertices, edges=edges)


def quotient_to_unlabelled(lo: Orbit) -> Orbit:
    """Merge isomorphic states of a labelled orbit.

    Vertices collapse to canonical forms; labels are pushed through each
    state's canonical relabelling so they stay meaningful relative to the
    stored representative.
    """
    if lo.kind != LABELLED:
        raise ValueError("quotient_to_unlabelled expects a labelled orbit")
    forms = [canonical_form(g) for g in lo.vertices]
    index: dict[tuple[int, ...], int] = {}
    vertices: list[Graph] = []
    project: list[int] = []
    for cf in forms:
        key = cf.canon.rows
        if key not in index:
            index[key] = len(vertices)
            vertices.append(cf.canon)
        project.append(index[key])
    edges: dict[tuple[int, int], tuple[set[int], set[int]]] = {}
    for (u, v), (lu, lv) in lo.edges.items():
        pu = forms[u].perm
        pv = forms[v].perm
        mu = [pu[a] for a in lu]
        mv = [pv[a] for a in lv]
        U, V = project[u], project[v]
        if U == V:
            _add_label(edges, U, V, mu + mv)
        else:
            _add_label(edges, U, V, mu)
            _add_label(edges, V, U, mv)
    return Orbit(
        kind=UNLABELLED,
        seed=lo.seed,
        vertices=vertices,
        edges=_freeze(edges),
    )


@dataclass
class DistanceTable:
    """All-pairs hop counts on the loop-stripped orbit graph."""

    matrix: np.ndarray
    diameter: int
    mean: float


def all_pairs_distances(o: Orbit) -> DistanceTable:
    """BFS from every vertex; mean over unordered distinct pairs."""
    k = o.vertex_count
    adj: list[list[int]] = [[] for _ in range(k)]
    for u, v in o.edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    dist = np.zeros((k, k), dtype=np.int32)
    for s in range(k):
        d = [-1] * k
        d[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if d[y] < 0:
                        d[y] = d[x] + 1
                        nxt.append(y)
            frontier = nxt
        dist[s] = d
    if k == 1:
        return DistanceTable(matrix=dist, diameter=0, mean=0.0)
    # symmetric with zero diagonal: the unordered-pair mean is the total
    # over ordered pairs divided by k(k-1)
    return DistanceTable(
        matrix=dist,
        diameter=int(dist.max()),
        mean=float(dist.sum(dtype=np.int64)) / (k * (k - 1)),
    )


def canonical_vertex_order(o: Orbit) -> list[int]:
    """Deterministic total order of orbit vertices.

    Isomorphic states are grouped (canonical form is the grouping key,
    compared first by edge count), and each group is ordered by its
    lexicographically sorted edge list.
    """

    def key(i: int):
        g = o.vertices[i]
        canon = canonical_form(g).canon
        return (g.edge_count(), canon.rows, tuple(g.edges()))

    return sorted(range(o.vertex_count), key=key)


def reorder(o: Orbit, order: list[int]) -> Orbit:
    """Orbit with vertices permuted; order[k] = old index of new vertex k."""
    pos = [0] * o.vertex_count
    for new, old in enumerate(order):
        pos[old] = new
    edges: dict[tuple[int, int], tuple[set[int], set[int]]] = {}
    for (u, v), (lu, lv) in o.edges.items():
        _add_label(edges, pos[u], pos[v], lu)
        if u != v:
            _add_label(edges, pos[v], pos[u], lv)
    return Orbit(
        kind=o.kind,
        seed=o.seed,
        vertices=[o.vertices[old] for old in order],
        edges=_freeze(edges),
    )
