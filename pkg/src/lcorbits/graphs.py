"""Small simple graphs as bit matrices, and local complementation.

A graph on n <= 16 vertices is stored as one adjacency bitmask per vertex,
so neighbourhood complementation is a handful of word XORs.  Graphs are
value types: every operation returns a fresh instance.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import CapacityError

MAX_VERTICES = 16


class Graph:
    """Immutable simple undirected graph on 1..16 vertices.

    rows[v] is the neighbourhood bitmask of vertex v (bit u set iff u~v).
    Invariants: symmetric adjacency, zero diagonal, 0-based vertices.
    """

    __slots__ = ("n", "rows")

    n: int
    rows: tuple[int, ...]

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-edge at vertex {v}")
        for v in range(n):
            for u in range(v):
                if (rows[v] >> u & 1) != (rows[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph({self.n}, edges={self.edges()})"

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-edge ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted."""
        out = []
        for v in range(self.n):
            row = self.rows[v] >> (v + 1) << (v + 1)  # keep only u > v
            for u in _bits(row):
                out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2


def _bits(mask: int):
    """Yield set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _graph_nocheck(n: int, rows: tuple[int, ...]) -> Graph:
    # Fast path for operations that preserve the invariants by construction.
    g = Graph.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", rows)
    return g


def local_complement(g: Graph, a: int) -> Graph:
    """Complement the subgraph induced on the neighbourhood of vertex a.

    Edges inside N(a) are toggled; everything else is untouched.  Row-wise:
    XOR the neighbourhood mask into every neighbour's row, then clear the
    diagonal bit that the XOR introduced.  Self-inverse.
    """
    if not 0 <= a < g.n:
        raise IndexError(f"vertex {a} out of range for n={g.n}")
    mask = g.rows[a]
    rows = list(g.rows)
    for v in _bits(mask):
        rows[v] = (rows[v] ^ mask) & ~(1 << v)
    return _graph_nocheck(g.n, tuple(rows))


def is_connected(g: Graph) -> bool:
    """True iff a search from vertex 0 reaches all n vertices."""
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= reach
    return seen == (1 << g.n) - 1


def leaves(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly 1."""
    return frozenset(v for v in range(g.n) if g.rows[v].bit_count() == 1)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices; perm[old] = new label."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.rows[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return _graph_nocheck(g.n, tuple(rows))


# Small named families used throughout the tests and demos.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with centre 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return _graph_nocheck(n, tuple(full & ~(1 << v) for v in range(n)))
