"""Exact graph metrics for states and orbits; class record assembly.

Colourings are exact (iterative deepening over the colour count with a
saturation-guided backtracker), planarity is delegated to networkx's
left-right test after the edge-count quick rejection, Hamiltonicity is a
pruned backtracking search under a node budget.

Loop handling convention, fixed by cross-checking published class data:
self-loops are stripped for chromatic numbers, planarity, tree and
Hamiltonicity, but retained for the edge count, the loop flag, Eulerian
degrees and the orbit automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import networkx as nx

from .canon import automorphism_generators, canonical_form, group_order
from .graphs import Graph, _bits
from .orbit import Orbit, all_pairs_distances
from .rankwidth import MAX_RANK_WIDTH_VERTICES, rank_width


def _check_loopless(rows: Sequence[int]) -> None:
    for v, row in enumerate(rows):
        if row >> v & 1:
            raise ValueError(f"self-loop at vertex {v}: strip loops first")


def _ensure_recursion_room(depth: int) -> None:
    # backtracking depth scales with the vertex or edge count; orbit graphs
    # run to thousands of vertices
    import sys

    needed = depth + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def _degree(rows: Sequence[int], v: int) -> int:
    return rows[v].bit_count()


def _is_bipartite(rows: Sequence[int]) -> bool:
    n = len(rows)
    colour = [-1] * n
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(rows[v]):
                if colour[u] < 0:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def _greedy_clique(rows: Sequence[int]) -> int:
    """Largest clique found greedily from high-degree seeds; a lower bound."""
    n = len(rows)
    best = 1 if n else 0
    order = sorted(range(n), key=lambda v: -rows[v].bit_count())
    for s in order[: max(1, min(16, n))]:
        clique = 1 << s
        cand = rows[s]
        while cand:
            v = max(_bits(cand), key=lambda u: (rows[u] & cand).bit_count())
            clique |= 1 << v
            cand &= rows[v]
        best = max(best, clique.bit_count())
    return best


def _greedy_colouring(rows: Sequence[int]) -> int:
    """DSATUR greedy; exact upper bound for the deepening loop."""
    n = len(rows)
    colours = [-1] * n
    neigh_masks = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colours[u] < 0),
            key=lambda u: (neigh_masks[u].bit_count(), rows[u].bit_count()),
        )
        c = 0
        while neigh_masks[v] >> c & 1:
            c += 1
        colours[v] = c
        for u in _bits(rows[v]):
            neigh_masks[u] |= 1 << c
    return max(colours) + 1 if n else 0


def _colourable(rows: Sequence[int], k: int) -> bool:
    n = len(rows)
    _ensure_recursion_room(n)
    colours = [-1] * n
    seen_masks = [0] * n  # colours already present in each vertex's neighbourhood
    full = (1 << k) - 1

    def rec(assigned: int, used: int) -> bool:
        if assigned == n:
            return True
        v = -1
        key = (-1, -1)
        for u in range(n):
            if colours[u] < 0:
                sat = seen_masks[u].bit_count()
                if sat == k:
                    return False
                cand = (sat, rows[u].bit_count())
                if cand > key:
                    key, v = cand, u
        avail = ~seen_masks[v] & full & ((1 << min(k, used + 1)) - 1)
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            colours[v] = c
            touched = []
            for u in _bits(rows[v]):
                if colours[u] < 0 and not seen_masks[u] >> c & 1:
                    seen_masks[u] |= 1 << c
                    touched.append(u)
            if rec(assigned + 1, max(used, c + 1)):
                return True
            colours[v] = -1
            for u in touched:
                seen_masks[u] &= ~(1 << c)
        return False

    return rec(0, 0)


def chromatic_number(rows: Sequence[int]) -> int:
    """Exact chromatic number of a loop-free graph."""
    _check_loopless(rows)
    n = len(rows)
    if n == 0:
        return 0
    if not any(rows):
        return 1
    if _is_bipartite(rows):
        return 2
    lower = max(3, _greedy_clique(rows))
    upper = _greedy_colouring(rows)
    for k in range(lower, upper):
        if _colourable(rows, k):
            return k
    return upper


def _edge_colourable(rows: Sequence[int], edges: list[tuple[int, int]], k: int) -> bool:
    full = (1 << k) - 1
    vmask = [0] * len(rows)
    _ensure_recursion_room(len(edges))
    remaining = list(range(len(edges)))

    def rec(used: int) -> bool:
        if not remaining:
            return True
        best_pos = -1
        best_avail = 0
        best_cnt = k + 1
        for pos, i in enumerate(remaining):
            u, v = edges[i]
            avail = full & ~(vmask[u] | vmask[v])
            c = avail.bit_count()
            if c == 0:
                return False
            if c < best_cnt:
                best_cnt, best_pos, best_avail = c, pos, avail
                if c == 1:
                    break
        picked = remaining[best_pos]
        u, v = edges[picked]
        remaining[best_pos] = remaining[-1]
        remaining.pop()
        avail = best_avail & ((1 << min(k, used + 1)) - 1)
        ok = False
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            vmask[u] |= 1 << c
            vmask[v] |= 1 << c
            if rec(max(used, c + 1)):
                ok = True
                break
            vmask[u] &= ~(1 << c)
            vmask[v] &= ~(1 << c)
        if not ok:
            remaining.append(picked)
        return ok

    return rec(0)


def _peel_light_edges(
    rows: Sequence[int], edges: list[tuple[int, int]], k: int
) -> list[tuple[int, int]]:
    """Drop edges that any partial k-edge-colouring can always absorb.

    While uv has deg(u) + deg(v) <= k + 1 the neighbouring edges block at
    most k - 1 colours, so uv extends greedily in reverse removal order;
    k-colourability of the residual core decides the whole graph.
    """
    deg = [r.bit_count() for r in rows]
    core = set(edges)
    changed = True
    while changed:
        changed = False
        for u, v in list(core):
            if deg[u] + deg[v] <= k + 1:
                core.remove((u, v))
                deg[u] -= 1
                deg[v] -= 1
                changed = True
    return sorted(core)


def chromatic_index(rows: Sequence[int]) -> int:
    """Exact chromatic index of a loop-free simple graph.

    By Vizing the answer is the maximum degree or one more; bipartite
    graphs settle at the maximum degree without search, and light edges
    are peeled off exactly before the backtracking search.
    """
    _check_loopless(rows)
    edges = _edge_list(rows)
    if not edges:
        return 0
    delta = max(r.bit_count() for r in rows)
    if _is_bipartite(rows):
        return delta
    core = _peel_light_edges(rows, edges, delta)
    if not core or _edge_colourable(rows, core, delta):
        return delta
    return delta + 1


def _edge_list(rows: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for v in range(len(rows)):
        row = rows[v] >> (v + 1) << (v + 1)
        for u in _bits(row):
            out.append((v, u))
    return out


def is_tree(o: Orbit) -> bool:
    """Loop-stripped orbit is connected and acyclic."""
    simple_edges = sum(1 for (u, v) in o.edges if u != v)
    return simple_edges == o.vertex_count - 1  # orbits are connected by construction


def is_planar(rows: Sequence[int]) -> bool:
    """Exact planarity of a loop-free simple graph."""
    _check_loopless(rows)
    n = len(rows)
    edges = _edge_list(rows)
    if n >= 3 and len(edges) > 3 * n - 6:
        return False
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.check_planarity(g, counterexample=False)[0]


def has_eulerian_circuit(o: Orbit) -> bool:
    """Connected with every degree even; a self-loop adds 2 to its vertex."""
    return all(o.degree(u, loops=True) % 2 == 0 for u in range(o.vertex_count))


class _BudgetExhausted(Exception):
    pass


def _rotation_extension_cycle(rows: Sequence[int], n: int) -> bool:
    """Heuristic cycle hunt: grow a path greedily, rotate the tail when
    stuck.  Finds witness cycles in graphs the exact search would only
    reach after deep backtracking; never proves absence."""
    import random as _random

    rng = _random.Random(0x5EED)
    for attempt in range(6):
        start = attempt % n
        path = [start]
        in_path = 1 << start
        for _ in range(60 * n):
            end = path[-1]
            ext = rows[end] & ~in_path
            if ext:
                choices = list(_bits(ext))
                v = choices[rng.randrange(len(choices))]
                path.append(v)
                in_path |= 1 << v
                if len(path) == n and rows[v] >> start & 1:
                    return True
                continue
            if len(path) == n and rows[end] >> start & 1:
                return True
            prev = path[-2] if len(path) > 1 else -1
            pivots = [u for u in _bits(rows[end] & in_path) if u != prev]
            if not pivots:
                break
            u = pivots[rng.randrange(len(pivots))]
            i = path.index(u)
            path[i + 1 :] = reversed(path[i + 1 :])
            if len(path) == n and rows[path[-1]] >> start & 1:
                return True
    return False


def has_hamiltonian_cycle(
    rows: Sequence[int], node_budget: int = 100_000_000
) -> bool | None:
    """Exact Hamiltonicity by pruned backtracking.

    A rotation-extension heuristic runs first and settles most Hamiltonian
    inputs with a witness; the backtracking search then decides the rest.
    Returns None only when the node budget runs out, which is distinct
    from a proven False.  Fewer than three vertices never form a cycle.
    """
    _check_loopless(rows)
    n = len(rows)
    if n < 3:
        return False
    if any(r.bit_count() < 2 for r in rows):
        return False
    if _rotation_extension_cycle(rows, n):
        return True
    _ensure_recursion_room(n)
    full = (1 << n) - 1
    nodes = 0

    def connected_over(mask: int) -> bool:
        seed = mask & -mask
        seen = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= rows[v] & mask
            frontier = reach & ~seen
            seen |= reach
        return seen == mask

    def rec(end: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        if visited == full:
            return bool(rows[end] & 1)  # close the cycle at vertex 0
        rest = full & ~visited
        if not connected_over(rest | (1 << end)):
            return False
        usable = rest | 1 | (1 << end)
        for u in _bits(rest):
            # u still needs two cycle neighbours among the unvisited set,
            # the current end and the start
            if (rows[u] & usable).bit_count() < 2:
                return False
        cand = sorted(
            _bits(rows[end] & rest),
            key=lambda v: (rows[v] & rest).bit_count(),
        )
        for v in cand:
            if rec(v, visited | (1 << v)):
                return True
        return False

    try:
        return rec(0, 1)
    except _BudgetExhausted:
        return None


@dataclass(frozen=True)
class ClassRecord:
    """One row of the per-class property table.

    Schmidt-measure bounds are published inputs, never computed here.
    State-level columns (min_edges, chi_g, chi_g_e, rank_width) minimize
    over the orbit's member states; orbit-level columns describe the orbit
    graph itself.
    """

    n_qubits: int
    min_edges: int
    schmidt_lower: int | None
    schmidt_upper: int | None
    rank_width: int | None
    orbit_size: int
    orbit_edges: int
    chi_g: int
    chi_g_e: int
    chi_orbit: int
    chi_orbit_e: int
    is_tree: bool
    mean_distance: float
    diameter: int
    aut_order: int
    planar: bool
    has_loop: bool
    eulerian: bool
    hamiltonian: bool | None

    @property
    def schmidt_mid(self) -> float | None:
        if self.schmidt_lower is None or self.schmidt_upper is None:
            return None
        return (self.schmidt_lower + self.schmidt_upper) / 2

    def validate(self) -> None:
        if self.schmidt_lower is not None and self.schmidt_upper is not None:
            if not 1 <= self.schmidt_lower <= self.schmidt_upper <= self.n_qubits - 1:
                raise ValueError("schmidt bounds out of range")
        if self.min_edges < self.n_qubits - 1:
            raise ValueError("connected states need at least n-1 edges")
        if self.diameter > self.orbit_size - 1:
            raise ValueError("diameter exceeds orbit size - 1")

    def to_dict(self) -> dict:
        return {
            "n_qubits": self.n_qubits,
            "min_edges": self.min_edges,
            "schmidt_lower": self.schmidt_lower,
            "schmidt_upper": self.schmidt_upper,
            "rank_width": self.rank_width,
            "orbit_size": self.orbit_size,
            "orbit_edges": self.orbit_edges,
            "chi_g": self.chi_g,
            "chi_g_e": self.chi_g_e,
            "chi_orbit": self.chi_orbit,
            "chi_orbit_e": self.chi_orbit_e,
            "is_tree": self.is_tree,
            "mean_distance": self.mean_distance,
            "diameter": self.diameter,
            "aut_order": self.aut_order,
            "planar": self.planar,
            "has_loop": self.has_loop,
            "eulerian": self.eulerian,
            "hamiltonian": self.hamiltonian,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassRecord":
        return cls(**data)


def minimum_edge_representative(o: Orbit) -> Graph:
    """Member with fewest edges; ties broken by smallest canonical form."""
    return min(
        o.vertices,
        key=lambda g: (g.edge_count(), canonical_form(g).canon.rows),
    )


def orbit_aut_order(o: Orbit) -> int:
    """Automorphism group order of the loop-annotated, label-ignored orbit."""
    rows = o.simple_rows(loops=True)
    return group_order(len(rows), automorphism_generators(rows))


def class_record(
    o: Orbit,
    schmidt: tuple[int, int] | None = None,
    hamiltonian_budget: int = 100_000_000,
) -> ClassRecord:
    """Aggregate every table column for one explored unlabelled orbit."""
    states = o.vertices
    n = states[0].n
    rep = minimum_edge_representative(o)
    stripped = o.simple_rows(loops=False)
    distances = all_pairs_distances(o)
    rwd = rank_width(rep)[0] if n <= MAX_RANK_WIDTH_VERTICES else None
    record = ClassRecord(
        n_qubits=n,
        min_edges=rep.edge_count(),
        schmidt_lower=schmidt[0] if schmidt else None,
        schmidt_upper=schmidt[1] if schmidt else None,
        rank_width=rwd,
        orbit_size=o.vertex_count,
        orbit_edges=o.edge_count,
        chi_g=min(chromatic_number(g.rows) for g in states),
        chi_g_e=min(chromatic_index(g.rows) for g in states),
        chi_orbit=chromatic_number(stripped),
        chi_orbit_e=chromatic_index(stripped),
        is_tree=is_tree(o),
        mean_distance=distances.mean,
        diameter=distances.diameter,
        aut_order=orbit_aut_order(o),
        planar=is_planar(stripped),
        has_loop=bool(o.loop_vertices()),
        eulerian=has_eulerian_circuit(o),
        hamiltonian=has_hamiltonian_cycle(stripped, hamiltonian_budget),
    )
    record.validate()
    return record


def with_schmidt(record: ClassRecord, bounds: tuple[int, int] | None) -> ClassRecord:
    if bounds is None:
        return record
    updated = replace(record, schmidt_lower=bounds[0], schmidt_upper=bounds[1])
    updated.validate()
    return updated
