"""Command-line interface.

Exit status: 0 on success (and for ``check``/``orientability``, when a
cordial witness exists), 1 when a search comes back negative or a budget or
balancing limit is hit, 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from . import serialize as ser
from .compose import assemble, balance_free_arcs, phi, phi_table
from .construct import construct_cordial
from .core import LabeledDigraph, is_23_cordial_pair, lambda_triple
from .errors import BudgetError, ConfigurationError, CordialError, InfeasibleError
from .search import (
    DEFAULT_ORIENTATION_BUDGET,
    classify_cordiality,
    explore_orientations,
    find_23_orientation,
    search_cordial_labeling,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class _Negative(Exception):
    """Raised by a command that wants exit status 1 with a reason."""

    def __init__(self, reason: str, message: str, **details):
        super().__init__(message)
        self.reason = reason
        self.details = details


def _read_text(path: str) -> tuple:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(), path
    except OSError as exc:
        raise ser.InputError(f"{path}: {exc.strerror}") from None


def _read_json(path: str):
    text, source = _read_text(path)
    return ser.loads(text, source), source


def _read_graph(path: str) -> tuple:
    doc, source = _read_json(path)
    return ser.parse_graph(doc, source)


def _read_labeled(path: str) -> LabeledDigraph:
    doc, source = _read_json(path)
    return ser.parse_labeled(doc, source)


def _emit(args, doc, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands --------------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        L = construct_cordial(args.dim)
    except ValueError as exc:
        raise ser.InputError(f"--dim: {exc}") from None
    doc = ser.labeled_to_json(L, compact=args.format == "compact")
    sys.stdout.write(ser.dumps(doc))
    return EXIT_OK


def cmd_lambda(args) -> int:
    L = _read_labeled(args.file)
    t = L.lambda_triple()
    _emit(args, {"alpha": t.alpha, "beta": t.beta, "gamma": t.gamma}, str(t))
    return EXIT_OK


def cmd_check(args) -> int:
    graph, _ = _read_graph(args.file)
    try:
        result = search_cordial_labeling(graph)
    except CordialError as exc:
        raise ser.InputError(f"{args.file}: {exc}") from None
    doc = {
        "cordial": result.found,
        "examined": result.examined,
        "friendly_total": result.friendly_total,
        "labeling": list(result.labeling) if result.found else None,
    }
    if result.found:
        t = lambda_triple(graph, result.labeling)
        doc["lambda"] = list(t)
        labels = "".join(map(str, result.labeling))
        _emit(args, doc, f"(2,3)-cordial: labeling {labels} gives {t} (friendly labeling {result.examined} of {result.friendly_total})")
        return EXIT_OK
    _emit(args, doc, f"not (2,3)-cordial: no friendly labeling of {result.friendly_total} admits (2,3)-cordial")
    return EXIT_NEGATIVE


def _resolve_bijection(spec: str):
    if spec in fixtures.BIJECTION_NAMES:
        return fixtures.bijection(spec)
    if Path(spec).exists() or spec == "-":
        doc, source = _read_json(spec)
        return ser.parse_bijection(doc, source)
    raise ser.InputError(
        f"--bijection: {spec!r} is neither a fixture bijection ({', '.join(fixtures.BIJECTION_NAMES)}) nor a file"
    )


def cmd_phi(args) -> int:
    L1 = _read_labeled(args.file1)
    L2 = _read_labeled(args.file2)
    b = _resolve_bijection(args.bijection) if args.bijection else None
    try:
        value = phi(L1, L2, b)
    except CordialError as exc:
        raise ser.InputError(str(exc)) from None
    _emit(args, {"phi": value}, str(value))
    return EXIT_OK


def cmd_phi_table(args) -> int:
    table = phi_table(fixtures.TABLE_ENTRIES, fixtures.table_cubes(), fixtures.table_bijections())
    names = [e.name for e in fixtures.TABLE_ENTRIES]
    width = max(len(n) for n in names) + 1
    lines = ["Phi".ljust(width) + "".join(n.rjust(width) for n in names)]
    for name, row in zip(names, table):
        lines.append(name.ljust(width) + "".join(str(x).rjust(width) for x in row))
    _emit(args, {"entries": names, "table": table}, "\n".join(lines))
    return EXIT_OK


def cmd_assemble(args) -> int:
    doc, source = _read_json(args.file)
    arr = ser.parse_arrangement(doc, source)
    p = assemble(arr)
    out = {
        "dimension": p.dimension,
        "inter_edges": p.inter_edge_count,
        "inter_zero_arcs": len(p.inter_zero_arcs),
        "free_edges": len(p.free_edges),
        "fixed_lambda": list(p.fixed_triple()),
    }
    lines = [
        f"dimension {p.dimension}",
        f"inter-cube edges {p.inter_edge_count}: {len(p.inter_zero_arcs)} labeled 0, {len(p.free_edges)} free",
        f"fixed arcs lambda {p.fixed_triple()}",
    ]
    if args.balance:
        try:
            L = balance_free_arcs(p)
        except InfeasibleError as exc:
            raise _Negative("infeasible", str(exc), best=list(exc.best)) from None
        t = L.lambda_triple()
        cordial = is_23_cordial_pair(L.graph, L.labels)
        out.update(lambda_=list(t), cordial=cordial)
        out["lambda"] = out.pop("lambda_")
        out["cube"] = ser.labeled_to_json(L)
        lines.append(f"balanced lambda {t} ({'(2,3)-cordial' if cordial else 'not (2,3)-cordial'})")
        if args.output:
            Path(args.output).write_text(ser.dumps(ser.labeled_to_json(L)))
    _emit(args, out, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    report = classify_cordiality(args.dim, jobs=args.jobs)
    doc = ser.report_to_json(report)
    lines = [
        f"dimension {report.dimension}",
        f"orientations visited {report.total_orientations}",
        f"isomorphism classes {report.isomorphism_class_count}",
        f"non-cordial classes {len(report.non_cordial_class_representatives)}",
    ]
    for H in report.non_cordial_class_representatives:
        lines.append(f"  orientation {ser.bits_to_hex(H.bit_sequence())}  bits {''.join(map(str, H.bit_sequence()))}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_orientability(args) -> int:
    if args.file in fixtures.UNDIRECTED_NAMES and not Path(args.file).exists():
        G = fixtures.undirected(args.file)
    else:
        doc, source = _read_json(args.file)
        G = ser.parse_undirected(doc, source)
    try:
        found = find_23_orientation(G, keep_isolated=args.keep_isolated, budget=args.budget)
    except BudgetError as exc:
        raise _Negative("budget_exceeded", str(exc), work=exc.work, budget=exc.budget) from None
    if found is None:
        _emit(args, {"orientable": False}, "not (2,3)-orientable")
        return EXIT_NEGATIVE
    D, f = found
    doc = {"orientable": True, "witness": ser.labeled_digraph_to_json(D, f)}
    _emit(args, doc, f"(2,3)-orientable: arcs {list(map(list, D.arcs))}, labels {''.join(map(str, f))}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        groups = {
            "cubes": list(fixtures.cube_names()),
            "bijections": list(fixtures.BIJECTION_NAMES),
            "arrangements": list(fixtures.ARRANGEMENT_NAMES),
            "graphs": list(fixtures.UNDIRECTED_NAMES),
        }
        _emit(args, groups, "\n".join(f"{k}: {' '.join(v)}" for k, v in groups.items()))
        return EXIT_OK
    name = args.name
    if name is None:
        raise ser.InputError("fixtures export: a fixture name is required")
    compact = args.format == "compact"
    try:
        if name in fixtures.cube_names() or name == "C":
            H = fixtures.hypercube(name)
            labels = None if name == "V" else fixtures.cube(name).labels
            doc = ser.graph_to_json(H, labels, compact)
        elif name in fixtures.BIJECTION_NAMES:
            doc = list(fixtures.bijection(name).forward)
        elif name in fixtures.ARRANGEMENT_NAMES:
            doc = ser.arrangement_to_json(fixtures.arrangement(name))
        else:
            doc = ser.undirected_to_json(fixtures.undirected(name))
    except ConfigurationError as exc:
        raise ser.InputError(str(exc)) from None
    sys.stdout.write(ser.dumps(doc))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    graph, labels = _read_graph(args.file)
    sys.stdout.write(ser.to_dot(graph, labels))
    return EXIT_OK


def cmd_explore(args) -> int:
    samples = explore_orientations(args.dim, args.samples, args.seed, args.labeling_tries)
    found = sum(1 for s in samples if s.labeling is not None)
    doc = {
        "dimension": args.dim,
        "seed": args.seed,
        "samples": [
            {
                "orientation": ser.bits_to_hex(s.orientation.bit_sequence()),
                "labels": ser.bits_to_hex(s.labeling) if s.labeling is not None else None,
                "exhaustive": s.exhaustive,
            }
            for s in samples
        ],
        "cordial_found": found,
    }
    lines = [f"dimension {args.dim}, seed {args.seed}: cordial labeling found for {found} of {len(samples)} orientations"]
    for s in samples:
        status = "cordial" if s.labeling is not None else ("not cordial" if s.exhaustive else "unknown")
        lines.append(f"  {ser.bits_to_hex(s.orientation.bit_sequence())}  {status}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    parser = argparse.ArgumentParser(
        prog="cordialcube", description="(2,3)-cordial labelings of oriented hypercubes", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a cordial cube of dimension 3k")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=["compact", "digraph"], default="compact")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lambda", parents=[common], help="print the arc-label triple of a labeled graph")
    p.add_argument("file", help="graph document, or - for stdin")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("check", parents=[common], help="search all friendly labelings for a cordial one")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("phi", parents=[common], help="count label agreements across a bijection")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--bijection", help="fixture bijection name or JSON file (default identity)")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phi-table", parents=[common], help="agreement table of the six example cubes")
    p.set_defaults(func=cmd_phi_table)

    p = sub.add_parser("assemble", parents=[common], help="join cubes along a meta cube")
    p.add_argument("file")
    p.add_argument("--balance", action="store_true", help="orient free edges to balance the triple")
    p.add_argument("--output", help="write the balanced cube to this file")
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("classify", parents=[common], help="classify all orientations of Q_dim")
    p.add_argument("--dim", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orientability", parents=[common], help="search orientations of an undirected graph")
    p.add_argument("file", help="undirected graph document or fixture name (X6, X7)")
    p.add_argument("--keep-isolated", action="store_true", help="do not drop isolated vertices first")
    p.add_argument("--budget", type=int, default=DEFAULT_ORIENTATION_BUDGET)
    p.set_defaults(func=cmd_orientability)

    p = sub.add_parser("fixtures", parents=[common], help="list or export built-in fixtures")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("--format", choices=["compact", "digraph"], default="compact")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz rendering of a graph document")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("explore", parents=[common], help="random orientations searched for cordial labelings")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--labeling-tries", type=int, default=20000)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ser.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _Negative as exc:
        payload = {"reason": exc.reason, "message": str(exc), **exc.details}
        if args.json:
            sys.stdout.write(json.dumps(payload) + "\n")
        print(f"error: {exc.reason}: {exc}", file=sys.stderr)
        print(json.dumps(payload), file=sys.stderr)
        return EXIT_NEGATIVE
    except CordialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
