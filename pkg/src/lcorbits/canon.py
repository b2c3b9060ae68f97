"""Canonical labelling, isomorphism tests and automorphism groups.

One backtracking search serves three needs: a canonical relabelling
certificate (deduplication key), automorphism generators (symmetry pruning
during orbit exploration) and the exact group order.

The search is the classical partition-refinement scheme: refine an ordered
partition to its coarsest equitable refinement, individualize a vertex from
the first smallest non-singleton cell, recurse.  Discrete partitions are
leaves; each leaf yields a relabelled adjacency certificate.  The canonical
form is the minimum certificate over all leaves.  Two leaves with equal
certificates differ by an automorphism, which is recorded and used to skip
sibling branches lying in the orbit of an already-explored vertex (only
automorphisms fixing every individualized ancestor are used, which keeps the
pruning exact).

Everything operates on plain adjacency bitmask rows, so the same engine
canonizes 16-vertex graph states and orbit graphs with thousands of
vertices.  Diagonal bits are permitted and travel with their vertex, which
is how self-loops on orbit graphs take part in isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graphs import Graph, _graph_nocheck


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical representative plus the relabelling that produces it.

    relabel(g, perm) == canon, and two graphs are isomorphic iff their
    canon fields are equal.
    """

    canon: Graph
    perm: tuple[int, ...]


@dataclass(frozen=True)
class AutomorphismGroup:
    generators: tuple[tuple[int, ...], ...]
    order: int


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _equitable_refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are repeatedly split by the vector of neighbour counts into every
    current cell; subcells are ordered by ascending count vector, so the
    result depends only on the partition and the graph, not on labels.
    """
    while True:
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                rv = rows[v]
                key = tuple((rv & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        if not changed:
            return out
        cells = out


def _apply_perm(rows: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    """Adjacency rows after relabelling; perm[old] = new."""
    n = len(rows)
    out = [0] * n
    for v in range(n):
        row = rows[v]
        bits = 0
        while row:
            low = row & -row
            bits |= 1 << perm[low.bit_length() - 1]
            row ^= low
        out[perm[v]] = bits
    return tuple(out)


def _invert(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, x in enumerate(perm):
        out[x] = i
    return tuple(out)


def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """a after b: v -> a[b[v]]."""
    return tuple(a[x] for x in b)


def _search(rows: tuple[int, ...]):
    """Run the full individualization-refinement search.

    Returns (canonical rows, canonical perm, automorphism generators).
    """
    n = len(rows)
    identity = tuple(range(n))
    cells0 = _equitable_refine(rows, [list(range(n))])

    best_cert: tuple[int, ...] | None = None
    best_perm: tuple[int, ...] | None = None
    first_cert: tuple[int, ...] | None = None
    first_perm: tuple[int, ...] | None = None
    gens: list[tuple[int, ...]] = []
    gen_set: set[tuple[int, ...]] = set()

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_cert, best_perm, first_cert, first_perm
        perm = [0] * n
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        perm = tuple(perm)
        cert = _apply_perm(rows, perm)
        if first_cert is None:
            first_cert, first_perm = cert, perm
        elif cert == first_cert:
            _record(first_perm, perm)
        if best_cert is None or cert < best_cert:
            best_cert, best_perm = cert, perm
        elif cert == best_cert and perm != best_perm:
            _record(best_perm, perm)

    def _record(p1: tuple[int, ...], p2: tuple[int, ...]) -> None:
        # relabel(g,p1) == relabel(g,p2), so p1^-1 . p2 fixes the graph
        sigma = _compose(_invert(p1), p2)
        if sigma != identity and sigma not in gen_set:
            gen_set.add(sigma)
            gens.append(sigma)

    def _equivalent_to_explored(
        v: int, explored: list[int], fixed: tuple[int, ...]
    ) -> bool:
        """True when a known automorphism fixing every individualized
        ancestor maps v onto an explored sibling; its subtree would repeat
        an explored one leaf for leaf."""
        usable = [g for g in gens if all(g[x] == x for x in fixed)]
        if not usable:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in usable:
            for w in range(n):
                a, b = find(w), find(g[w])
                if a != b:
                    parent[a] = b
        fv = find(v)
        return any(find(u) == fv for u in explored)

    def rec(cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        target = -1
        tsize = n + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < tsize:
                target = i
                tsize = len(cell)
        if target < 0:
            leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored and _equivalent_to_explored(v, explored, fixed):
                continue
            child = (
                cells[:target]
                + [[v], [u for u in cell if u != v]]
                + cells[target + 1 :]
            )
            rec(_equitable_refine(rows, child), fixed + (v,))
            explored.append(v)

    rec(cells0, ())
    assert best_cert is not None and best_perm is not None
    return best_cert, best_perm, tuple(gens)


@lru_cache(maxsize=1 << 18)
def _canonize_rows(rows: tuple[int, ...]):
    return _search(rows)


def canonical_rows(
    rows: Sequence[int],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical adjacency rows and the relabelling reaching them.

    Works for any vertex count; diagonal bits (self-loops) are respected.
    """
    cert, perm, _ = _canonize_rows(tuple(rows))
    return cert, perm


def automorphism_generators(rows: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    _, _, gens = _canonize_rows(tuple(rows))
    return gens


def canonical_form(g: Graph) -> CanonicalForm:
    cert, perm, _ = _canonize_rows(g.rows)
    return CanonicalForm(canon=_graph_nocheck(g.n, cert), perm=perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return _canonize_rows(g.rows)[0] == _canonize_rows(h.rows)[0]


def automorphism_group(g: Graph) -> AutomorphismGroup:
    gens = automorphism_generators(g.rows)
    return AutomorphismGroup(generators=gens, order=group_order(g.n, gens))


def vertex_symmetry_classes(g: Graph) -> list[tuple[int, ...]]:
    """Orbits of the vertex set under the automorphism group.

    Vertices in one class produce isomorphic graphs when locally
    complemented, so exploration only needs one representative per class.
    """
    return permutation_orbits(g.n, automorphism_generators(g.rows))


def permutation_orbits(
    n: int, generators: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    """Partition of 0..n-1 into orbits under the generated group."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(find(v), []).append(v)
    return [tuple(sorted(c)) for c in sorted(cells.values())]


def group_order(n: int, generators: Sequence[Sequence[int]]) -> int:
    """Exact order of the permutation group generated by `generators`.

    Deterministic Schreier-Sims: build a stabilizer chain, then keep sifting
    Schreier generators until every level is closed; the order is the
    product of the transversal sizes (orbit-stabilizer).
    """
    identity = tuple(range(n))
    strong: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for g in generators:
        t = tuple(g)
        if t != identity and t not in seen:
            seen.add(t)
            strong.append(t)
    if not strong:
        return 1

    def mul(a, b):
        return tuple(a[x] for x in b)

    def inv(a):
        out = [0] * n
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    base: list[int] = []

    def ensure_base(p) -> None:
        if all(p[b] == b for b in base):
            for i in range(n):
                if p[i] != i:
                    base.append(i)
                    return

    def level_gens(i: int) -> list[tuple[int, ...]]:
        return [g for g in strong if all(g[base[j]] == base[j] for j in range(i))]

    def transversal(i: int, gens: list[tuple[int, ...]]) -> dict[int, tuple[int, ...]]:
        b = base[i]
        t = {b: identity}
        frontier = [b]
        while frontier:
            nxt = []
            for x in frontier:
                tx = t[x]
                for g in gens:
                    y = g[x]
                    if y not in t:
                        t[y] = mul(g, tx)
                        nxt.append(y)
            frontier = nxt
        return t

    while True:
        for g in strong:
            ensure_base(g)
        levels = []
        for i in range(len(base)):
            gens_i = level_gens(i)
            levels.append((gens_i, transversal(i, gens_i)))

        def sift(p):
            for i, (_, t) in enumerate(levels):
                x = p[base[i]]
                if x not in t:
                    return p
                p = mul(inv(t[x]), p)
                if p == identity:
                    return p
            return p

        new_gen = None
        for i, (gens_i, t) in enumerate(levels):
            for x, tx in t.items():
                for g in gens_i:
                    schreier = mul(inv(t[g[x]]), mul(g, tx))
                    if schreier == identity:
                        continue
                    residue = sift(schreier)
                    if residue != identity:
                        new_gen = residue
                        break
                if new_gen:
                    break
            if new_gen:
                break
        if new_gen is None:
            order = 1
            for _, t in levels:
                order *= len(t)
            return order
        if new_gen not in seen:
            seen.add(new_gen)
            strong.append(new_gen)
        else:  # pragma: no cover - sift of a known generator reduced to itself
            raise RuntimeError("stabilizer chain failed to close")
