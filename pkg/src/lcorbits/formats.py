"""Interchange formats: graph6, edge-list text, orbit documents, exports.

Orbit documents are JSON with a fixed key order and canonical vertex
order, so identical orbits serialize to identical bytes regardless of how
they were explored.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .canon import canonical_form
from .errors import FormatError
from .graphs import Graph, _graph_nocheck
from .metrics import ClassRecord
from .orbit import (
    Orbit,
    all_pairs_distances,
    canonical_vertex_order,
    reorder,
)

SCHEMA_VERSION = 1

GRAPH6_MAX = 62


def encode_graph6(g: Graph) -> str:
    """graph6 text: size byte n+63, then the upper triangle x(0,1), x(0,2),
    x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each +63."""
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise FormatError("empty graph6 text")
    for offset, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"byte {ord(ch)} outside graph6 range", offset)
    n = ord(data[0]) - 63
    if n > GRAPH6_MAX:
        raise FormatError(f"vertex count {n} beyond single-byte header", 0)
    if n < 1:
        raise FormatError("graph6 vertex count must be at least 1", 0)
    npairs = n * (n - 1) // 2
    expected = 1 + (npairs + 5) // 6
    if len(data) != expected:
        raise FormatError(
            f"graph6 body length {len(data) - 1}, expected {expected - 1}",
            min(len(data), expected) - 1,
        )
    bits = []
    for ch in data[1:]:
        group = ord(ch) - 63
        bits.extend(group >> k & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise FormatError("nonzero padding bits", len(data) - 1)
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows)


def parse_edge_list(text: str) -> Graph:
    """One "u v" pair per line, 1-based labels; blank and # lines ignored."""
    edges = []
    top = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if u < 1 or v < 1:
            raise FormatError(f"line {lineno}: labels are 1-based")
        edges.append((u - 1, v - 1))
        top = max(top, u, v)
    if not edges:
        raise FormatError("no edges found")
    return Graph.from_edges(top, edges)


def orbit_to_document(
    o: Orbit, metrics: ClassRecord | None = None
) -> dict[str, Any]:
    """JSON-ready dict in canonical vertex order; labels are 1-based."""
    ordered = reorder(o, canonical_vertex_order(o))
    edges = []
    for (u, v), (lu, lv) in sorted(ordered.edges.items()):
        edges.append(
            {
                "u": u,
                "v": v,
                "labels_from_u": sorted(a + 1 for a in lu),
                "labels_from_v": sorted(a + 1 for a in lv),
            }
        )
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": ordered.kind,
        "seed": encode_graph6(ordered.seed),
        "vertices": [encode_graph6(g) for g in ordered.vertices],
        "edges": edges,
        "stats": ordered.stats(),
    }
    if metrics is not None:
        doc["metrics"] = metrics.to_dict()
    return doc


def document_to_orbit(doc: dict[str, Any]) -> tuple[Orbit, ClassRecord | None]:
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise FormatError(
            f"unsupported schema_version {doc.get('schema_version')!r}"
        )
    try:
        vertices = [parse_graph6(t) for t in doc["vertices"]]
        seed = parse_graph6(doc["seed"])
        kind = doc["kind"]
        if kind not in ("labelled", "unlabelled"):
            raise FormatError(f"unknown orbit kind {kind!r}")
        state_n = vertices[0].n if vertices else 0
        edges = {}
        for e in doc["edges"]:
            u, v = e["u"], e["v"]
            if not (0 <= u <= v < len(vertices)):
                raise FormatError(f"edge endpoints ({u},{v}) out of order or range")
            for side in ("labels_from_u", "labels_from_v"):
                if any(not 1 <= a <= state_n for a in e[side]):
                    raise FormatError(f"edge ({u},{v}) has labels outside 1..{state_n}")
            edges[(u, v)] = (
                frozenset(a - 1 for a in e["labels_from_u"]),
                frozenset(a - 1 for a in e["labels_from_v"]),
            )
    except KeyError as exc:
        raise FormatError(f"missing document field {exc}") from None
    orbit = Orbit(kind=kind, seed=seed, vertices=vertices, edges=edges)
    metrics = None
    if "metrics" in doc:
        metrics = ClassRecord.from_dict(doc["metrics"])
    return orbit, metrics


def document_bytes(doc: dict[str, Any]) -> bytes:
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def load_document(path: str) -> tuple[Orbit, ClassRecord | None]:
    with open(path, "rb") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    return document_to_orbit(doc)


def adjacency_matrix(o: Orbit) -> np.ndarray:
    """Entry (i,j) is the smallest 1-based label complementing state i
    toward state j, 0 when no move links them; the diagonal carries
    self-loop labels."""
    k = o.vertex_count
    out = np.zeros((k, k), dtype=np.int64)
    for (u, v), (lu, lv) in o.edges.items():
        if lu:
            out[u, v] = min(lu) + 1
        if lv:
            out[v, u] = min(lv) + 1
    return out


def _csv_bytes(matrix: np.ndarray) -> bytes:
    lines = [",".join(str(int(x)) for x in row) for row in matrix]
    return ("\n".join(lines) + "\n").encode()


def block_boundaries(o: Orbit) -> dict[str, list[int]]:
    """Contiguous group sizes along the canonical order: isomorphism
    classes and edge counts."""
    iso_blocks: list[int] = []
    edge_blocks: list[int] = []
    prev_canon = None
    prev_edges = None
    for g in o.vertices:
        canon = canonical_form(g).canon.rows
        ec = g.edge_count()
        if canon == prev_canon:
            iso_blocks[-1] += 1
        else:
            iso_blocks.append(1)
            prev_canon = canon
        if ec == prev_edges:
            edge_blocks[-1] += 1
        else:
            edge_blocks.append(1)
            prev_edges = ec
    return {"isomorphism_blocks": iso_blocks, "edge_count_blocks": edge_blocks}


def export_matrices(o: Orbit) -> tuple[bytes, bytes, bytes]:
    """(adjacency CSV, distance CSV, block-sidecar JSON) in canonical order."""
    ordered = reorder(o, canonical_vertex_order(o))
    adjacency = adjacency_matrix(ordered)
    distances = all_pairs_distances(ordered).matrix
    sidecar = (
        json.dumps(block_boundaries(ordered), sort_keys=True, separators=(",", ":"))
        + "\n"
    ).encode()
    return _csv_bytes(adjacency), _csv_bytes(distances), sidecar


def export_dot(o: Orbit) -> bytes:
    """DOT text; unlabelled orbits use directed arcs per direction since
    labels only make sense relative to each stored representative."""
    ordered = reorder(o, canonical_vertex_order(o))
    lines = []
    if ordered.kind == "unlabelled":
        lines.append("digraph orbit {")
        for (u, v), (lu, lv) in sorted(ordered.edges.items()):
            if u == v:
                labels = ",".join(str(a + 1) for a in sorted(lu))
                lines.append(f'  {u} -> {u} [label="{labels}"];')
            else:
                if lu:
                    labels = ",".join(str(a + 1) for a in sorted(lu))
                    lines.append(f'  {u} -> {v} [label="{labels}"];')
                if lv:
                    labels = ",".join(str(a + 1) for a in sorted(lv))
                    lines.append(f'  {v} -> {u} [label="{labels}"];')
    else:
        lines.append("graph orbit {")
        for (u, v), (lu, _) in sorted(ordered.edges.items()):
            labels = ",".join(str(a + 1) for a in sorted(lu))
            lines.append(f'  {u} -- {v} [label="{labels}"];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()
