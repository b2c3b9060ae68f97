"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 capacity error,
4 verification failure.  All diagnostics go to stderr; data goes to files.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import re
import sys
from pathlib import Path

from .census import (
    correlation_report,
    enumerate_classes,
    load_catalogue,
    orbit_isomorphism_matrix,
)
from .errors import CapacityError, DisconnectedSeedError, FormatError
from .formats import (
    document_bytes,
    document_to_orbit,
    export_dot,
    export_matrices,
    load_document,
    orbit_to_document,
    parse_edge_list,
    parse_graph6,
)
from .graphs import Graph, is_connected
from .metrics import class_record, with_schmidt
from .orbit import explore_labelled, explore_unlabelled
from .stabilizer import verify_lc

USAGE_ERROR = 1
DATA_ERROR = 2
CAPACITY_ERROR = 3
VERIFICATION_FAILURE = 4

_EDGE_LINE = re.compile(r"^\s*\d+\s+\d+\s*$")


def _err(message: str) -> None:
    print(f"lcorbits: {message}", file=sys.stderr)


def _load_input_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    text = Path(args.input).read_text(encoding="utf-8")
    for line in text.splitlines():
        if line.strip() and not line.strip().startswith("#"):
            if _EDGE_LINE.match(line):
                return parse_edge_list(text)
            return parse_graph6(line)
    raise FormatError(f"no graph found in {args.input}")


def _cmd_explore(args) -> int:
    seed = _load_input_graph(args)
    explore = explore_labelled if args.kind == "labelled" else explore_unlabelled
    orbit = explore(seed)
    Path(args.out).write_bytes(document_bytes(orbit_to_document(orbit)))
    _err(
        f"{args.kind} orbit: {orbit.vertex_count} vertices, "
        f"{orbit.edge_count} edges -> {args.out}"
    )
    return 0


def _cmd_census(args) -> int:
    census = enumerate_classes(args.n, long_run=args.long_run)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    summary = {"schema_version": 1, "n": census.n, "count": census.class_count}
    entries = []
    for i, cls in enumerate(census.classes, start=1):
        name = f"class_{i:03d}.json"
        doc = orbit_to_document(cls.orbit, metrics=cls.record)
        (out / name).write_bytes(document_bytes(doc))
        entries.append(
            {
                "file": name,
                "catalogue_matches": list(cls.catalogue_matches),
                "labelled_orbit_size": cls.labelled_orbit_size,
                "labelled_orbit_count": cls.labelled_orbit_count,
                "record": cls.record.to_dict(),
            }
        )
    summary["classes"] = entries
    (out / "census.json").write_bytes(
        (json.dumps(summary, sort_keys=True, separators=(",", ":")) + "\n").encode()
    )
    _err(f"census n={census.n}: {census.class_count} classes -> {out}")
    return 0


def _cmd_metrics(args) -> int:
    orbit, _ = load_document(args.orbit)
    schmidt = None
    if args.schmidt:
        with open(args.schmidt, encoding="utf-8") as fh:
            bounds = json.load(fh)
        schmidt = (bounds["lower"], bounds["upper"])
    record = class_record(orbit)
    record = with_schmidt(record, schmidt)
    Path(args.out).write_bytes(
        (
            json.dumps(record.to_dict(), sort_keys=True, separators=(",", ":"))
            + "\n"
        ).encode()
    )
    _err(f"metrics for {args.orbit} -> {args.out}")
    return 0


def _cmd_matrix(args) -> int:
    orbit, _ = load_document(args.orbit)
    stem = Path(args.orbit)
    stem = stem.with_suffix("") if stem.suffix == ".json" else stem
    wrote = []
    if args.adjacency or args.distance:
        adjacency, distance, sidecar = export_matrices(orbit)
        if args.adjacency:
            path = stem.with_name(stem.name + ".adjacency.csv")
            path.write_bytes(adjacency)
            wrote.append(str(path))
        if args.distance:
            path = stem.with_name(stem.name + ".distance.csv")
            path.write_bytes(distance)
            wrote.append(str(path))
        blocks = stem.with_name(stem.name + ".blocks.json")
        blocks.write_bytes(sidecar)
        wrote.append(str(blocks))
    if args.dot:
        path = stem.with_name(stem.name + ".dot")
        path.write_bytes(export_dot(orbit))
        wrote.append(str(path))
    if not wrote:
        _err("nothing to export: pass --adjacency, --distance or --dot")
        return USAGE_ERROR
    _err("wrote " + ", ".join(wrote))
    return 0


def _connected_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        if is_connected(g):
            yield g


def _cmd_verify_lc(args) -> int:
    failures = 0
    checked = 0
    if args.n <= 5:
        for g in _connected_graphs(args.n):
            for a in range(args.n):
                checked += 1
                if not verify_lc(g, a):
                    failures += 1
                    _err(f"MISMATCH at graph {g.edges()} vertex {a}")
        mode = "exhaustive"
    else:
        rng = random.Random(args.seed)
        while checked < args.trials:
            edges = [
                (u, v)
                for u in range(args.n)
                for v in range(u + 1, args.n)
                if rng.random() < 0.5
            ]
            g = Graph.from_edges(args.n, edges)
            if not is_connected(g):
                continue
            a = rng.randrange(args.n)
            checked += 1
            if not verify_lc(g, a):
                failures += 1
                _err(f"MISMATCH at graph {g.edges()} vertex {a}")
        mode = f"random trials (seed {args.seed})"
    _err(f"verify-lc n={args.n}: {checked} checks, {failures} failures ({mode})")
    return 0 if failures == 0 else VERIFICATION_FAILURE


def _census_records(census_dir: Path):
    summary_path = census_dir / "census.json"
    with open(summary_path, encoding="utf-8") as fh:
        summary = json.load(fh)
    return summary


def _cmd_correlate(args) -> int:
    from .metrics import ClassRecord

    census_dir = Path(args.census)
    summary = _census_records(census_dir)
    records = [ClassRecord.from_dict(e["record"]) for e in summary["classes"]]
    if args.catalogue:
        load_catalogue(args.catalogue)  # validates the file parses
    report = correlation_report(records)
    out = Path(args.out) if args.out else census_dir / "correlations.csv"
    lines = [f"# dataset: {report.dataset}", "x,y,r"]
    for e in report.entries:
        lines.append(f"{e.x},{e.y},{e.r:.6f}")
    out.write_bytes(("\n".join(lines) + "\n").encode())
    _err(f"correlations over {report.count} classes -> {out}")
    return 0


def _cmd_iso_matrix(args) -> int:
    census_dir = Path(args.census)
    summary = _census_records(census_dir)
    orbits = []
    for entry in summary["classes"]:
        orbit, _ = load_document(str(census_dir / entry["file"]))
        orbits.append(orbit)
    matrix = orbit_isomorphism_matrix(orbits, strip_loops=args.strip_loops)
    out = Path(args.out) if args.out else census_dir / "iso_matrix.csv"
    lines = [",".join("1" if x else "0" for x in row) for row in matrix]
    out.write_bytes(("\n".join(lines) + "\n").encode())
    _err(f"{len(orbits)}x{len(orbits)} isomorphism matrix -> {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcorbits",
        description="Map local-complementation orbits of graph states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("explore", help="map the orbit of a seed graph state")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="seed file (graph6 or 1-based edge list)")
    src.add_argument("--g6", help="seed as a graph6 string")
    p.add_argument("--kind", choices=("labelled", "unlabelled"), required=True)
    p.add_argument("--out", required=True, help="orbit document to write")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("census", help="enumerate all LC classes on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--long-run", action="store_true", dest="long_run")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("metrics", help="compute the class record of an orbit")
    p.add_argument("--orbit", required=True, help="orbit document")
    p.add_argument("--schmidt", help='JSON file {"lower": a, "upper": b}')
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("matrix", help="export adjacency/distance/DOT views")
    p.add_argument("--orbit", required=True, help="orbit document")
    p.add_argument("--adjacency", action="store_true")
    p.add_argument("--distance", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser(
        "verify-lc", help="check the graph rule against the local unitary"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_lc)

    p = sub.add_parser("correlate", help="correlation table over a census")
    p.add_argument("--census", required=True, help="census directory")
    p.add_argument("--catalogue", help="external catalogue CSV")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_correlate)

    p = sub.add_parser("iso-matrix", help="orbit isomorphism matrix of a census")
    p.add_argument("--census", required=True, help="census directory")
    p.add_argument("--strip-loops", action="store_true", dest="strip_loops")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_iso_matrix)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else USAGE_ERROR
    try:
        return args.func(args)
    except FormatError as exc:
        _err(f"data error: {exc}")
        return DATA_ERROR
    except DisconnectedSeedError as exc:
        _err(f"data error: {exc}")
        return DATA_ERROR
    except CapacityError as exc:
        _err(f"capacity error: {exc}")
        return CAPACITY_ERROR
    except FileNotFoundError as exc:
        _err(f"data error: {exc}")
        return DATA_ERROR
    except (ValueError, KeyError) as exc:
        _err(f"data error: {exc}")
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
