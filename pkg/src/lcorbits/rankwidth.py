"""Cut-rank over GF(2) and exact rank-width by exhaustive tree search.

A rank decomposition is a subcubic tree whose leaves carry the graph
vertices; each tree edge splits the leaves in two and is scored by the
GF(2) rank of the biadjacency block across that split.  Rank-width is the
minimum over all decompositions of the maximum edge score.

Trees are enumerated by inserting graph vertices one at a time onto any
existing tree edge (subdividing it and hanging the new leaf), which visits
every leaf-labelled subcubic topology exactly once: (2k-5)!! trees for k
leaves.  A branch is abandoned as soon as some current edge already cuts
the placed vertices at rank >= the incumbent width; ranks over partial
placements only grow as leaves are added, so the pruning is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapacityError
from .graphs import Graph, _bits, is_connected

MAX_RANK_WIDTH_VERTICES = 10


def cut_rank(g: Graph, subset: int | set[int] | frozenset[int]) -> int:
    """GF(2) rank of the biadjacency block between subset and its complement."""
    amask = subset if isinstance(subset, int) else _to_mask(subset)
    full = (1 << g.n) - 1
    if amask & ~full:
        raise ValueError("subset contains vertices outside the graph")
    bmask = full & ~amask
    return _gf2_rank([g.rows[v] & bmask for v in _bits(amask)])


def _to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _gf2_rank(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            rank += 1
    return rank


@dataclass(frozen=True)
class RankDecomposition:
    """A witness decomposition: subcubic tree plus the leaf assignment.

    Nodes are integers; leaf_map[v] is the tree leaf carrying graph vertex
    v.  Internal nodes all have degree exactly 3 (for >= 3 leaves).
    """

    edges: tuple[tuple[int, int], ...]
    leaf_map: dict[int, int]
    width: int


def enumerate_subcubic_trees(
    k: int,
) -> Iterator[tuple[tuple[tuple[int, int], ...], dict[int, int]]]:
    """All leaf-labelled subcubic trees on k labelled leaves.

    Yields (edges, leaf_map); leaves are nodes 0..k-1, internal nodes k up.
    Exactly (2k-5)!! trees for k >= 3, one for k = 2.
    """
    if not 2 <= k <= MAX_RANK_WIDTH_VERTICES:
        raise CapacityError(f"leaf count {k} outside 2..{MAX_RANK_WIDTH_VERTICES}")

    def grow(edges: list[tuple[int, int]], next_leaf: int, next_internal: int):
        if next_leaf == k:
            yield tuple(sorted(edges)), {v: v for v in range(k)}
            return
        for i in range(len(edges)):
            a, b = edges[i]
            m = next_internal
            rest = edges[:i] + edges[i + 1 :]
            new_edges = rest + [(a, m), (m, b), (m, next_leaf)]
            yield from grow(new_edges, next_leaf + 1, next_internal + 1)

    yield from grow([(0, 1)], 2, k)


def rank_width(g: Graph) -> tuple[int, RankDecomposition | None]:
    """Exact rank-width and one optimal decomposition.

    Exhaustive branch-and-bound over leaf-insertion trees; connected graphs
    on 2..10 vertices.  A single vertex has rank-width 0 by convention.
    """
    n = g.n
    if n == 1:
        return 0, None
    if n > MAX_RANK_WIDTH_VERTICES:
        raise CapacityError(
            f"rank-width search supports up to {MAX_RANK_WIDTH_VERTICES} vertices"
        )
    if not is_connected(g):
        raise ValueError("rank-width is computed for connected graphs")

    full = (1 << n) - 1
    rank_memo: dict[int, int] = {}

    def placed_rank(amask: int, placed: int) -> int:
        # rank of the block between amask and placed-minus-amask
        key = (amask << n) | placed
        r = rank_memo.get(key)
        if r is None:
            bmask = placed & ~amask
            r = _gf2_rank([g.rows[v] & bmask for v in _bits(amask)])
            rank_memo[key] = r
        return r

    best_width = n + 1
    best_edges: tuple[tuple[int, int], ...] | None = None

    # every edge carries the set of graph vertices on its side away from
    # leaf 0; those away-sets nest (laminar family), so after hanging the
    # new leaf inside edge i, exactly the edges whose away-set contains
    # edge i's away-set gain the new vertex
    def search(
        edges: list[tuple[int, int, int]],  # (node_a, node_b, away_mask)
        next_vertex: int,
        next_internal: int,
        placed: int,
        current_width: int,
    ) -> None:
        nonlocal best_width, best_edges
        if next_vertex == n:
            if current_width < best_width:
                best_width = current_width
                best_edges = tuple((a, b) for a, b, _ in edges)
            return
        v = next_vertex
        vbit = 1 << v
        new_placed = placed | vbit
        for i in range(len(edges)):
            a, b, below = edges[i]
            m = next_internal
            candidate = [
                (c, d, mask | vbit if below & ~mask == 0 else mask)
                for j, (c, d, mask) in enumerate(edges)
                if j != i
            ]
            candidate += [
                (a, m, below | vbit),
                (m, b, below),
                (m, v, vbit),
            ]
            width = 0
            ok = True
            for _, _, mask in candidate:
                r = placed_rank(mask, new_placed)
                if r > width:
                    width = r
                if width >= best_width:
                    ok = False
                    break
            if ok:
                search(candidate, v + 1, next_internal + 1, new_placed, width)

    # root the construction at vertex 0--1 edge of the tree (not of the graph)
    first = [(0, 1, 0b10)]
    start_width = placed_rank(0b10 & 0b11, 0b11)
    if start_width < best_width:
        search(first, 2, n, 0b11, start_width)

    assert best_edges is not None
    return best_width, RankDecomposition(
        edges=tuple(sorted(best_edges)),
        leaf_map={v: v for v in range(n)},
        width=best_width,
    )
