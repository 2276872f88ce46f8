"""Hand-transcribed example cubes, bijections and arrangements.

Cube vertices are numbered by drawing position: front face top-left,
top-right, bottom-left, bottom-right, then the back face in the same order.
That numbering is already the binary-coordinate numbering of Q_3, so the
arc lists below are taken straight from the drawings.
"""

from __future__ import annotations

from functools import lru_cache

from .compose import CubeArrangement, MetaArc, Slot, TableEntry, VertexBijection, assemble, balance_free_arcs
from .core import Digraph, LabeledDigraph, OrientedHypercube, hypercube_edges, hypercube_from_digraph
from .errors import ConfigurationError
from .search import UndirectedGraph, x_graph

# name -> (vertex count, arcs, labels or None)
_CUBES = {
    "C1": (2, [(0, 1)], (0, 1)),
    "C2": (4, [(0, 1), (1, 3), (2, 3), (2, 0)], (1, 1, 0, 0)),
    "C3": (
        8,
        [(0, 1), (3, 2), (2, 0), (1, 3), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        (1, 0, 0, 1, 1, 0, 0, 1),
    ),
    "A": (
        8,
        [(0, 1), (3, 2), (2, 0), (1, 3), (4, 5), (5, 7), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        (0, 1, 0, 1, 1, 0, 1, 0),
    ),
    "B": (
        8,
        [(0, 1), (3, 2), (2, 0), (1, 3), (4, 5), (7, 5), (7, 6), (6, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        (1, 0, 1, 1, 0, 1, 0, 0),
    ),
    # positions hold s1, b3, s3, v1, b1, v2, s2, b2
    "V": (
        8,
        [(1, 0), (2, 3), (0, 2), (1, 3), (4, 5), (7, 5), (7, 6), (4, 6), (4, 0), (1, 5), (6, 2), (7, 3)],
        None,
    ),
}

V_VERTEX_NAMES = ("s1", "b3", "s3", "v1", "b1", "v2", "s2", "b2")

# Published arc-label triples of the labeled cubes.
PUBLISHED_TRIPLES = {"C1": (1, 0, 0), "C2": (1, 1, 2), "C3": (4, 4, 4), "A": (4, 4, 4), "B": (4, 4, 4)}

# Inter-cube edges in the drawings join equally positioned vertices.
BIJECTION_NAMES = ("identity", "AB", "AC", "BC")

# Agreement counts over (A-bar, A, B-bar, B, C-bar, C), upper triangle mirrored.
TABLE_ENTRIES = (
    TableEntry("~A", "A", True),
    TableEntry("A", "A"),
    TableEntry("~B", "B", True),
    TableEntry("B", "B"),
    TableEntry("~C", "C", True),
    TableEntry("C", "C"),
)
PUBLISHED_TABLE = (
    (8, 0, 2, 6, 4, 4),
    (0, 8, 6, 2, 4, 4),
    (2, 6, 8, 0, 4, 4),
    (6, 2, 0, 8, 4, 4),
    (4, 4, 4, 4, 8, 0),
    (4, 4, 4, 4, 0, 8),
)

ARRANGEMENT_NAMES = ("fig5_4D", "fig8a_6D", "fig8b_6D", "fig9_7D")

# meta-cube slots for the two 6-cubes, by drawing position
_FIG8A = ("~A", "~C", "A", "~A", "C", "C", "~A", "~C")
_FIG8B = ("~B", "~A", "B", "~C", "B", "~A", "~B", "C")


def cube_names() -> tuple:
    return tuple(_CUBES)


@lru_cache(maxsize=None)
def hypercube(name: str) -> OrientedHypercube:
    if name == "C":
        name = "C3"
    if name not in _CUBES:
        raise ConfigurationError(f"unknown fixture cube {name!r}; known: {', '.join(_CUBES)}")
    n, arcs, _ = _CUBES[name]
    return hypercube_from_digraph(Digraph(n, arcs))


def drawing_digraph(name: str) -> Digraph:
    """The cube with arcs listed in drawing order rather than edge order."""
    n, arcs, _ = _CUBES["C3" if name == "C" else name]
    return Digraph(n, arcs)


@lru_cache(maxsize=None)
def cube(name: str) -> LabeledDigraph:
    H = hypercube(name)
    labels = _CUBES["C3" if name == "C" else name][2]
    if labels is None:
        raise ConfigurationError(f"fixture cube {name!r} carries no labeling")
    return LabeledDigraph(H, labels)


def labeled_cubes() -> dict:
    return {name: cube(name) for name, spec in _CUBES.items() if spec[2] is not None}


def bijection(name: str) -> VertexBijection:
    if name not in BIJECTION_NAMES:
        raise ConfigurationError(f"unknown fixture bijection {name!r}; known: {', '.join(BIJECTION_NAMES)}")
    return VertexBijection.identity(8)


def table_bijections() -> dict:
    """Bijections keyed by base-cube pair, for :func:`compose.phi_table`."""
    return {("A", "B"): bijection("AB"), ("A", "C"): bijection("AC"), ("B", "C"): bijection("BC")}


def table_cubes() -> dict:
    return {"A": cube("A"), "B": cube("B"), "C": cube("C3")}


def _pair_bijection(a: str, b: str) -> str:
    if a == b:
        return "identity"
    if a + b in BIJECTION_NAMES:
        return a + b
    return b + a + "^-1"


def _cube_arrangement(meta_slots) -> CubeArrangement:
    slots = tuple(Slot(s.lstrip("~"), s.startswith("~")) for s in meta_slots)
    j = len(slots).bit_length() - 1
    arcs = tuple(
        MetaArc(lo, hi, _pair_bijection(slots[lo].cube, slots[hi].cube)) for lo, hi in hypercube_edges(j)
    )
    return CubeArrangement(
        j,
        slots,
        arcs,
        cubes=table_cubes(),
        bijections={name: bijection(name) for name in BIJECTION_NAMES},
    )


@lru_cache(maxsize=None)
def arrangement(name: str) -> CubeArrangement:
    if name == "fig5_4D":
        return _cube_arrangement(("A", "B"))
    if name == "fig8a_6D":
        return _cube_arrangement(_FIG8A)
    if name == "fig8b_6D":
        return _cube_arrangement(_FIG8B)
    if name == "fig9_7D":
        inner = balance_free_arcs(assemble(arrangement("fig8a_6D")))
        outer = balance_free_arcs(assemble(arrangement("fig8b_6D")))
        return CubeArrangement(
            1,
            (Slot("fig8a_6D"), Slot("fig8b_6D")),
            (MetaArc(0, 1, "identity"),),
            cubes={"fig8a_6D": inner, "fig8b_6D": outer},
        )
    raise ConfigurationError(f"unknown fixture arrangement {name!r}; known: {', '.join(ARRANGEMENT_NAMES)}")


UNDIRECTED_NAMES = ("X6", "X7")


def undirected(name: str) -> UndirectedGraph:
    if name not in UNDIRECTED_NAMES:
        raise ConfigurationError(f"unknown fixture graph {name!r}; known: {', '.join(UNDIRECTED_NAMES)}")
    return x_graph(int(name[1:]))


def fixture_names() -> tuple:
    return cube_names() + BIJECTION_NAMES + ARRANGEMENT_NAMES + UNDIRECTED_NAMES
