"""Full census of LC classes, catalogue matching and orbit statistics.

A census enumerates every connected graph on n vertices and clusters them
into local-complementation classes.  Two enumeration strategies ship:

  labelled-sweep  iterate all 2^(n(n-1)/2) labelled graphs; a graph that is
                  a relabelling of an already-explored orbit member is
                  skipped via a precomputed closure set, anything else
                  connected opens a new class (default through n = 7)

  augment         grow the unlabelled atlas level by level: every graph on
                  k vertices arises from one on k-1 by adding a vertex, so
                  canonical deduplication of all single-vertex extensions
                  is complete (default for n = 8, whose labelled sweep is
                  out of reach in this implementation)

Class indices are never invented here: computed records are matched to the
bundled published catalogue by an invariant fingerprint, and ambiguities
are reported as candidate sets.
"""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass
from importlib import resources
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .canon import automorphism_group, canonical_form, canonical_rows
from .errors import CapacityError
from .graphs import Graph, _bits, _graph_nocheck, is_connected
from .metrics import (
    ClassRecord,
    class_record,
    minimum_edge_representative,
    with_schmidt,
)
from .orbit import Orbit, explore_labelled, explore_unlabelled

MAX_CENSUS_VERTICES = 8
LONG_RUN_THRESHOLD = 8

_CATALOGUE_FILE = "class_catalogue_n7.csv"

_BOOL_FIELDS = {"tree", "planar", "has_loop", "eulerian", "hamiltonian"}


@dataclass(frozen=True)
class CatalogueRow:
    """One published class row; field names mirror ClassRecord."""

    class_index: int
    qubits: int
    min_edges: int
    schmidt_lower: int
    schmidt_upper: int
    rank_width: int
    orbit_size: int
    orbit_edges: int
    chi_g: int
    chi_g_e: int
    chi_orbit: int
    chi_orbit_e: int
    tree: bool
    mean_distance: float
    diameter: int
    aut_order: int
    planar: bool
    has_loop: bool
    eulerian: bool
    hamiltonian: bool

    @property
    def schmidt_mid(self) -> float:
        return (self.schmidt_lower + self.schmidt_upper) / 2


def load_catalogue(path: str | None = None) -> list[CatalogueRow]:
    """The bundled published table for classes 3..45 (or an external CSV)."""
    if path is None:
        text = (
            resources.files("lcorbits") / "data" / _CATALOGUE_FILE
        ).read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    rows = []
    for raw in csv.DictReader(text.splitlines()):
        kwargs = {}
        for key, value in raw.items():
            if key in _BOOL_FIELDS:
                kwargs[key] = bool(int(value))
            elif key == "mean_distance":
                kwargs[key] = float(value)
            else:
                kwargs[key] = int(value)
        rows.append(CatalogueRow(**kwargs))
    return rows


def fingerprint(record: ClassRecord | CatalogueRow) -> tuple:
    """Invariant key used to align computed classes with published rows."""
    qubits = record.qubits if isinstance(record, CatalogueRow) else record.n_qubits
    return (
        qubits,
        record.min_edges,
        record.orbit_size,
        record.orbit_edges,
        record.chi_g,
        record.chi_g_e,
        record.diameter,
    )


def fingerprint_match(
    record: ClassRecord, catalogue: Sequence[CatalogueRow]
) -> tuple[int, ...]:
    """Catalogue class indices agreeing with the record's fingerprint."""
    key = fingerprint(record)
    return tuple(
        sorted(row.class_index for row in catalogue if fingerprint(row) == key)
    )


@dataclass
class CensusClass:
    representative: Graph  # minimum-edge member
    orbit: Orbit
    record: ClassRecord
    labelled_orbit_size: int
    labelled_orbit_count: int
    catalogue_matches: tuple[int, ...]


@dataclass
class Census:
    n: int
    classes: list[CensusClass]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def by_catalogue_index(self, class_index: int) -> CensusClass:
        for cls in self.classes:
            if cls.catalogue_matches == (class_index,):
                return cls
        raise KeyError(f"no census class matches catalogue index {class_index}")


def _pair_bits(n: int) -> list[list[int]]:
    bits = [[0] * n for _ in range(n)]
    k = 0
    for v in range(1, n):
        for u in range(v):
            bits[u][v] = bits[v][u] = 1 << k
            k += 1
    return bits


def _decode_code(code: int, n: int) -> Graph:
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return _graph_nocheck(n, tuple(rows))


def _labelled_closure_codes(o: Orbit, pair_bits: list[list[int]]) -> set[int]:
    """Upper-triangle codes of every labelled graph isomorphic to any orbit
    member: the orbit's whole labelled universe."""
    n = o.vertices[0].n
    out: set[int] = set()
    for member in o.vertices:
        edges = member.edges()
        for perm in itertools.permutations(range(n)):
            code = 0
            for u, v in edges:
                code |= pair_bits[perm[u]][perm[v]]
            out.add(code)
    return out


def _sweep_orbits(n: int, workers: int | None) -> list[Orbit]:
    pair_bits = _pair_bits(n)
    seen: set[int] = set()
    orbits: list[Orbit] = []
    for code in range(1 << (n * (n - 1) // 2)):
        if code in seen:
            continue
        g = _decode_code(code, n)
        if not is_connected(g):
            continue
        o = explore_unlabelled(g, workers=workers)
        orbits.append(o)
        seen |= _labelled_closure_codes(o, pair_bits)
    return orbits


def connected_graph_atlas(n: int) -> list[Graph]:
    """Canonical forms of every connected unlabelled graph on n vertices.

    Level-by-level vertex addition: deleting a vertex of any graph on k
    vertices leaves a graph on k-1, so extending every (k-1)-graph by one
    vertex with every neighbour mask reaches every k-graph.
    """
    level = [Graph.empty(1)]
    for k in range(2, n + 1):
        seen: set[tuple[int, ...]] = set()
        nxt: list[Graph] = []
        top = 1 << (k - 1)
        for parent in level:
            base = list(parent.rows) + [0]
            for mask in range(top):
                rows = base.copy()
                rows[k - 1] = mask
                m = mask
                while m:
                    low = m & -m
                    rows[low.bit_length() - 1] |= top
                    m ^= low
                cert, _ = canonical_rows(tuple(rows))
                if cert not in seen:
                    seen.add(cert)
                    nxt.append(_graph_nocheck(k, cert))
        level = nxt
    return sorted(
        (g for g in level if is_connected(g)),
        key=lambda g: (g.edge_count(), g.rows),
    )


def cluster_into_classes(
    graphs: Iterable[Graph], workers: int | None = None
) -> list[Orbit]:
    """Partition connected graphs into LC classes by orbit exploration.

    Input graphs must be canonical forms (as produced by
    connected_graph_atlas); each unassigned one opens a new class.
    """
    assigned: set[tuple[int, ...]] = set()
    orbits: list[Orbit] = []
    for g in graphs:
        if g.rows in assigned:
            continue
        o = explore_unlabelled(g, workers=workers)
        orbits.append(o)
        assigned.update(m.rows for m in o.vertices)
    return orbits


def _augment_orbits(n: int, workers: int | None) -> list[Orbit]:
    return cluster_into_classes(connected_graph_atlas(n), workers=workers)


def enumerate_classes(
    n: int,
    long_run: bool = False,
    strategy: str | None = None,
    workers: int | None = None,
    catalogue: Sequence[CatalogueRow] | None = None,
    hamiltonian_budget: int = 100_000_000,
) -> Census:
    """Census of all LC classes of connected graphs on n vertices.

    n = 8 is the long-running tier and must be requested explicitly;
    larger n is out of enumeration reach (explore orbits from supplied
    representatives instead).
    """
    if not 2 <= n <= MAX_CENSUS_VERTICES:
        raise CapacityError(
            f"census supports 2..{MAX_CENSUS_VERTICES} vertices, got {n}"
        )
    if n >= LONG_RUN_THRESHOLD and not long_run:
        raise CapacityError(f"n={n} census is the long tier; enable long_run")
    if strategy is None:
        strategy = "labelled-sweep" if n <= 7 else "augment"
    if strategy == "labelled-sweep":
        orbits = _sweep_orbits(n, workers)
    elif strategy == "augment":
        orbits = _augment_orbits(n, workers)
    else:
        raise ValueError(f"unknown census strategy: {strategy}")

    if catalogue is None:
        catalogue = load_catalogue()
    keyed = []
    for o in orbits:
        rep = minimum_edge_representative(o)
        keyed.append(((rep.edge_count(), canonical_form(rep).canon.rows), rep, o))
    keyed.sort(key=lambda item: item[0])

    classes: list[CensusClass] = []
    for _, rep, o in keyed:
        record = class_record(o, hamiltonian_budget=hamiltonian_budget)
        matches = fingerprint_match(record, catalogue)
        if len(matches) == 1:
            row = next(r for r in catalogue if r.class_index == matches[0])
            record = with_schmidt(record, (row.schmidt_lower, row.schmidt_upper))
        lo = explore_labelled(rep, workers=workers)
        total_labelled = sum(
            factorial(n) // automorphism_group(m).order for m in o.vertices
        )
        if total_labelled % lo.vertex_count:
            raise RuntimeError("labelled members do not split into equal orbits")
        classes.append(
            CensusClass(
                representative=rep,
                orbit=o,
                record=record,
                labelled_orbit_size=lo.vertex_count,
                labelled_orbit_count=total_labelled // lo.vertex_count,
                catalogue_matches=matches,
            )
        )
    return Census(n=n, classes=classes)


def labelled_members(o: Orbit) -> list[Graph]:
    """Every labelled graph isomorphic to some member of the class."""
    n = o.vertices[0].n
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for member in o.vertices:
        for perm in itertools.permutations(range(n)):
            rows = [0] * n
            for u, v in member.edges():
                rows[perm[u]] |= 1 << perm[v]
                rows[perm[v]] |= 1 << perm[u]
            key = tuple(rows)
            if key not in seen:
                seen.add(key)
                out.append(_graph_nocheck(n, key))
    out.sort(key=lambda g: g.rows)
    return out


def enumerate_labelled_orbits(o: Orbit, workers: int | None = None) -> list[Orbit]:
    """Partition the class's labelled universe into labelled orbits."""
    remaining: dict[tuple[int, ...], Graph] = {
        g.rows: g for g in labelled_members(o)
    }
    orbits: list[Orbit] = []
    while remaining:
        seed = remaining[min(remaining)]
        lo = explore_labelled(seed, workers=workers)
        orbits.append(lo)
        for g in lo.vertices:
            remaining.pop(g.rows, None)
    return orbits


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Product-moment correlation; zero variance is an error."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValueError("need two equal-length sequences of at least 2 points")
    if np.isclose(x.std(), 0.0) or np.isclose(y.std(), 0.0):
        raise ValueError("correlation undefined for zero-variance input")
    return float(np.corrcoef(x, y)[0, 1])


CORRELATION_PAIRS: tuple[tuple[str, str], ...] = (
    ("diameter", "orbit_size"),
    ("diameter", "schmidt_mid"),
    ("chi_orbit", "schmidt_mid"),
    ("chi_orbit_e", "schmidt_mid"),
    ("chi_orbit", "chi_g_e"),
    ("schmidt_mid", "rank_width"),
    ("schmidt_mid", "min_edges"),
    ("schmidt_mid", "chi_g_e"),
)


@dataclass(frozen=True)
class CorrelationEntry:
    x: str
    y: str
    r: float


@dataclass
class CorrelationReport:
    dataset: str
    count: int
    entries: list[CorrelationEntry]

    def value(self, x: str, y: str) -> float:
        for e in self.entries:
            if (e.x, e.y) in ((x, y), (y, x)):
                return e.r
        raise KeyError(f"no correlation entry for ({x}, {y})")


def correlation_report(
    records: Iterable[ClassRecord], dataset: str = ""
) -> CorrelationReport:
    """All tracked correlation pairs over records carrying Schmidt bounds.

    Always states its own dataset range: published values were computed
    over a wider range of qubit counts, so magnitudes differ.
    """
    recs = [r for r in records if r.schmidt_mid is not None]
    if len(recs) < 2:
        raise ValueError("need at least two records with Schmidt bounds")
    qubit_range = (min(r.n_qubits for r in recs), max(r.n_qubits for r in recs))
    if not dataset:
        dataset = f"{len(recs)} classes, {qubit_range[0]}..{qubit_range[1]} qubits"
    entries = []
    for x_name, y_name in CORRELATION_PAIRS:
        xs = [getattr(r, x_name) for r in recs]
        ys = [getattr(r, y_name) for r in recs]
        entries.append(CorrelationEntry(x=x_name, y=y_name, r=pearson(xs, ys)))
    return CorrelationReport(dataset=dataset, count=len(recs), entries=entries)


def orbit_certificate(o: Orbit, strip_loops: bool = False) -> tuple:
    """Canonical certificate of the label-ignored orbit graph."""
    rows = o.simple_rows(loops=not strip_loops)
    return (o.vertex_count, canonical_rows(rows)[0])


def orbits_isomorphic(a: Orbit, b: Orbit, strip_loops: bool = False) -> bool:
    return orbit_certificate(a, strip_loops) == orbit_certificate(b, strip_loops)


def orbit_isomorphism_matrix(
    orbits: Sequence[Orbit], strip_loops: bool = False
) -> np.ndarray:
    certs = [orbit_certificate(o, strip_loops) for o in orbits]
    k = len(certs)
    out = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(k):
            out[i, j] = certs[i] == certs[j]
    return out


def stationary_distribution(o: Orbit) -> tuple[np.ndarray, float]:
    """Simple-random-walk stationary distribution on the loop-carrying
    orbit (degree over twice the edge count) and its total-variation
    distance from uniform."""
    k = o.vertex_count
    degrees = np.array([o.degree(u, loops=True) for u in range(k)], dtype=float)
    pi = degrees / degrees.sum()
    tv = 0.5 * float(np.abs(pi - 1.0 / k).sum())
    return pi, tv
