"""JSON and DOT formats.

Two graph documents are understood:

* labeled digraph: ``{"vertices": [{"id": 0, "label": 1}, ...], "arcs": [[t, h], ...]}``
  (labels may be omitted on every vertex);
* compact hypercube: ``{"dim": n, "orientation": HEX, "labels": HEX}`` with
  ``labels`` optional.

Hex strings encode a bit sequence read left to right (first bit is the
most significant bit of the first digit), zero-padded on the right to a
whole number of digits.  The orientation sequence follows the canonical
edge order and the label sequence follows vertex ids.
"""

from __future__ import annotations

import json
from typing import Optional

import jsonschema

from . import fixtures
from .compose import CubeArrangement, MetaArc, Slot, VertexBijection, assemble, balance_free_arcs
from .core import (
    Digraph,
    GraphLike,
    LabeledDigraph,
    OrientedHypercube,
    as_digraph,
    edge_count,
    induce_arc_labeling,
)
from .errors import CordialError
from .search import ClassificationReport, UndirectedGraph


class InputError(CordialError, ValueError):
    """A document is malformed; the message names the offending field or line."""


# -- hex bit strings -------------------------------------------------------------


def bits_to_hex(seq) -> str:
    seq = list(seq)
    digits = (len(seq) + 3) // 4
    padded = seq + [0] * (4 * digits - len(seq))
    return "".join(
        "0123456789abcdef"[padded[4 * i] << 3 | padded[4 * i + 1] << 2 | padded[4 * i + 2] << 1 | padded[4 * i + 3]]
        for i in range(digits)
    )


def hex_to_bits(text: str, length: int, what: str = "value") -> tuple:
    digits = (length + 3) // 4
    if len(text) != digits:
        raise InputError(f"{what}: expected {digits} hex digits for {length} bits, got {len(text)}")
    try:
        value = int(text, 16) if text else 0
    except ValueError:
        raise InputError(f"{what}: {text!r} is not a hex string") from None
    seq = tuple((value >> (4 * digits - 1 - i)) & 1 for i in range(4 * digits))
    if any(seq[length:]):
        raise InputError(f"{what}: padding bits after bit {length} must be zero")
    return seq[:length]


# -- schemas ---------------------------------------------------------------------

_PAIR = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}

LABELED_DIGRAPH_SCHEMA = {
    "type": "object",
    "required": ["vertices", "arcs"],
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "properties": {"id": {"type": "integer", "minimum": 0}, "label": {"enum": [0, 1]}},
                "additionalProperties": False,
            },
        },
        "arcs": {"type": "array", "items": _PAIR},
    },
    "additionalProperties": False,
}

HYPERCUBE_SCHEMA = {
    "type": "object",
    "required": ["dim", "orientation"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1, "maximum": 24},
        "orientation": {"type": "string", "pattern": "^[0-9a-fA-F]*$"},
        "labels": {"type": "string", "pattern": "^[0-9a-fA-F]*$"},
    },
    "additionalProperties": False,
}

UNDIRECTED_SCHEMA = {
    "type": "object",
    "required": ["vertex_count", "edges"],
    "properties": {
        "vertex_count": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": _PAIR},
    },
    "additionalProperties": False,
}

_PERMUTATION = {"type": "array", "items": {"type": "integer", "minimum": 0}}

ARRANGEMENT_SCHEMA = {
    "type": "object",
    "required": ["meta_dimension", "slots", "meta_arcs"],
    "properties": {
        "meta_dimension": {"type": "integer", "minimum": 1, "maximum": 8},
        "slots": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["cube"],
                "properties": {"cube": {"type": "string"}, "complemented": {"type": "boolean"}},
                "additionalProperties": False,
            },
        },
        "meta_arcs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tail", "head"],
                "properties": {
                    "tail": {"type": "integer", "minimum": 0},
                    "head": {"type": "integer", "minimum": 0},
                    "bijection": {"oneOf": [{"type": "string"}, _PERMUTATION]},
                },
                "additionalProperties": False,
            },
        },
        "cubes": {"type": "object", "additionalProperties": HYPERCUBE_SCHEMA},
        "bijections": {"type": "object", "additionalProperties": _PERMUTATION},
    },
    "additionalProperties": False,
}


def _validate(doc, schema, what: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{what}: field {path}: {exc.message}") from None


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# -- graphs ----------------------------------------------------------------------


def hypercube_to_json(H: OrientedHypercube, labels=None) -> dict:
    doc = {"dim": H.dimension, "orientation": bits_to_hex(H.bit_sequence())}
    if labels is not None:
        doc["labels"] = bits_to_hex(labels)
    return doc


def labeled_digraph_to_json(D: GraphLike, labels=None) -> dict:
    D = as_digraph(D)
    if labels is None:
        vertices = [{"id": v} for v in range(D.vertex_count)]
    else:
        vertices = [{"id": v, "label": int(labels[v])} for v in range(D.vertex_count)]
    return {"vertices": vertices, "arcs": [[t, h] for t, h in D.arcs]}


def graph_to_json(graph: GraphLike, labels=None, compact: bool = True) -> dict:
    if compact and isinstance(graph, OrientedHypercube):
        return hypercube_to_json(graph, labels)
    return labeled_digraph_to_json(graph, labels)


def labeled_to_json(L: LabeledDigraph, compact: bool = True) -> dict:
    return graph_to_json(L.graph, L.labels, compact)


def parse_graph(doc, source: str = "<input>") -> tuple:
    """Parse either graph document into ``(graph, labels or None)``."""
    if isinstance(doc, dict) and "dim" in doc:
        _validate(doc, HYPERCUBE_SCHEMA, source)
        n = doc["dim"]
        seq = hex_to_bits(doc["orientation"], edge_count(n), f"{source}: field orientation")
        H = OrientedHypercube.from_bit_sequence(n, seq)
        labels = None
        if "labels" in doc:
            labels = hex_to_bits(doc["labels"], 1 << n, f"{source}: field labels")
        return H, labels
    _validate(doc, LABELED_DIGRAPH_SCHEMA, source)
    ids = [v["id"] for v in doc["vertices"]]
    if ids != list(range(len(ids))):
        raise InputError(f"{source}: field vertices: ids must be 0..{len(ids) - 1} in order")
    with_label = [v for v in doc["vertices"] if "label" in v]
    if with_label and len(with_label) != len(ids):
        raise InputError(f"{source}: field vertices: either every vertex or no vertex carries a label")
    try:
        D = Digraph(len(ids), tuple(tuple(a) for a in doc["arcs"]))
    except CordialError as exc:
        raise InputError(f"{source}: field arcs: {exc}") from None
    labels = tuple(v["label"] for v in doc["vertices"]) if with_label else None
    return D, labels


def parse_labeled(doc, source: str = "<input>") -> LabeledDigraph:
    graph, labels = parse_graph(doc, source)
    if labels is None:
        raise InputError(f"{source}: field labels: a vertex labeling is required")
    return LabeledDigraph(graph, labels)


def undirected_to_json(G: UndirectedGraph) -> dict:
    return {"vertex_count": G.vertex_count, "edges": [[u, v] for u, v in G.edges]}


def parse_undirected(doc, source: str = "<input>") -> UndirectedGraph:
    _validate(doc, UNDIRECTED_SCHEMA, source)
    try:
        return UndirectedGraph(doc["vertex_count"], tuple(tuple(e) for e in doc["edges"]))
    except CordialError as exc:
        raise InputError(f"{source}: field edges: {exc}") from None


# -- arrangements ----------------------------------------------------------------


def arrangement_to_json(arr: CubeArrangement) -> dict:
    return {
        "meta_dimension": arr.meta_dimension,
        "slots": [{"cube": s.cube, "complemented": s.complemented} for s in arr.slots],
        "meta_arcs": [{"tail": a.tail, "head": a.head, "bijection": a.bijection} for a in arr.meta_arcs],
        "cubes": {name: labeled_to_json(L) for name, L in arr.cubes.items()},
        "bijections": {name: list(b.forward) for name, b in arr.bijections.items()},
    }


def resolve_fixture_cube(name: str) -> LabeledDigraph:
    """A labeled fixture cube, or a fixture arrangement assembled and balanced."""
    if name in fixtures.ARRANGEMENT_NAMES:
        return balance_free_arcs(assemble(fixtures.arrangement(name)))
    return fixtures.cube(name)


def parse_arrangement(doc, source: str = "<input>") -> CubeArrangement:
    _validate(doc, ARRANGEMENT_SCHEMA, source)
    cubes = {}
    for name, cdoc in doc.get("cubes", {}).items():
        cubes[name] = parse_labeled(cdoc, f"{source}: cubes/{name}")
    bijections = {}
    for name, perm in doc.get("bijections", {}).items():
        try:
            bijections[name] = VertexBijection(tuple(perm))
        except CordialError as exc:
            raise InputError(f"{source}: field bijections/{name}: {exc}") from None
    slots = []
    for i, s in enumerate(doc["slots"]):
        name = s["cube"]
        if name not in cubes:
            try:
                cubes[name] = resolve_fixture_cube(name)
            except CordialError as exc:
                raise InputError(f"{source}: field slots/{i}/cube: {exc}") from None
        slots.append(Slot(name, s.get("complemented", False)))
    arcs = []
    for i, a in enumerate(doc["meta_arcs"]):
        bij = a.get("bijection", "identity")
        if isinstance(bij, list):
            name = f"meta_arc_{i}"
            try:
                bijections[name] = VertexBijection(tuple(bij))
            except CordialError as exc:
                raise InputError(f"{source}: field meta_arcs/{i}/bijection: {exc}") from None
            bij = name
        else:
            base = bij[:-3] if bij.endswith("^-1") else bij
            if base not in bijections and base != "identity":
                try:
                    bijections[base] = fixtures.bijection(base)
                except CordialError as exc:
                    raise InputError(f"{source}: field meta_arcs/{i}/bijection: {exc}") from None
        arcs.append(MetaArc(a["tail"], a["head"], bij))
    try:
        return CubeArrangement(doc["meta_dimension"], tuple(slots), tuple(arcs), cubes, bijections)
    except CordialError as exc:
        raise InputError(f"{source}: {exc}") from None


def parse_bijection(doc, source: str = "<input>") -> VertexBijection:
    if not isinstance(doc, list) or not all(isinstance(x, int) for x in doc):
        raise InputError(f"{source}: a bijection file holds a JSON array of vertex ids")
    try:
        return VertexBijection(tuple(doc))
    except CordialError as exc:
        raise InputError(f"{source}: {exc}") from None


# -- reports -----------------------------------------------------------------------


def report_to_json(report: ClassificationReport) -> dict:
    return {
        "dimension": report.dimension,
        "total_orientations": report.total_orientations,
        "isomorphism_class_count": report.isomorphism_class_count,
        "non_cordial_class_count": len(report.non_cordial_class_representatives),
        "non_cordial_class_representatives": [
            hypercube_to_json(H) for H in report.non_cordial_class_representatives
        ],
    }


# -- DOT -------------------------------------------------------------------------


def _fmt_label(x: int) -> str:
    return f"+{x}" if x > 0 else str(x)


def to_dot(graph: GraphLike, labels: Optional[tuple] = None, name: str = "D") -> str:
    """Graphviz digraph, one edge statement per arc.

    With a labeling, vertices show ``id:label`` and every arc carries its
    induced label in the ``g`` attribute.
    """
    D = as_digraph(graph)
    lines = [f"digraph {name} {{"]
    for v in range(D.vertex_count):
        text = f"{v}:{labels[v]}" if labels is not None else str(v)
        lines.append(f'  {v} [label="{text}"];')
    arc_labels = induce_arc_labeling(D, labels) if labels is not None else None
    for i, (t, h) in enumerate(D.arcs):
        if arc_labels is None:
            lines.append(f"  {t} -> {h};")
        else:
            g = _fmt_label(arc_labels[i])
            lines.append(f'  {t} -> {h} [label="{g}", g="{g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
